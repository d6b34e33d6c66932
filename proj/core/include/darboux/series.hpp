#ifndef DARBOUX_SERIES_HPP
#define DARBOUX_SERIES_HPP

#include <vector>

#include "darboux/poly.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// Truncated expansion at infinity: sum_{i<order} c_i / lambda^{i+1}.
/// `order()` is the number of coefficients that are guaranteed correct;
/// every operation propagates the guaranteed order and refuses to invent
/// terms beyond it.
class Series {
public:
    explicit Series(Backend b = Backend::Exact) : backend_(b) {}
    explicit Series(std::vector<Scalar> coeffs)
        : backend_(common_backend(coeffs)), coeffs_(std::move(coeffs)) {}

    Backend backend() const { return backend_; }
    int order() const { return static_cast<int>(coeffs_.size()); }
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Series operator-() const;
    Series operator+(const Series& o) const;  // order = min
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;  // order = min + 1
    Series scaled(const Scalar& c) const;
    Series truncated(int order) const;

    /// Index of the first nonzero coefficient, or -1 when all guaranteed
    /// coefficients vanish.
    int first_nonzero() const;

    Series to_float() const;

private:
    Backend backend_;
    std::vector<Scalar> coeffs_;
};

/// Result of inverting a series: a polynomial in lambda plus a tail that is
/// again O(1/lambda).
struct LaurentParts {
    Poly poly;
    Series tail;
};

/// The signed reciprocal -1/f of a series f with some nonzero coefficient.
/// Throws AllZeroPrefix when f is indistinguishable from 0 at its guaranteed
/// order.
LaurentParts series_reciprocal(const Series& f);

/// Expansion of num/den at infinity through `order` coefficients of 1/lambda
/// (deg num may equal or exceed deg den; the polynomial part is discarded
/// into `poly_part` when requested).
Series rational_series(const Poly& num, const Poly& den, int order,
                       Poly* poly_part = nullptr);

}  // namespace darboux

#endif
