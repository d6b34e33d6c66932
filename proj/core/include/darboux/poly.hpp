#ifndef DARBOUX_POLY_HPP
#define DARBOUX_POLY_HPP

#include <complex>
#include <string>
#include <vector>

#include "darboux/scalar.hpp"

namespace darboux {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has degree -1 and an empty coefficient list; a backend tag is
/// kept so that it still participates in arithmetic.
class Poly {
public:
    explicit Poly(Backend b = Backend::Exact) : backend_(b) {}
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly zero(Backend b) { return Poly(b); }
    static Poly constant(const Scalar& c);
    static Poly monomial(int k, Backend b);  // lambda^k
    /// c1 * lambda + c0
    static Poly linear(const Scalar& c0, const Scalar& c1);

    Backend backend() const { return backend_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(int k) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar leading() const;
    bool is_monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Scalar eval(const Scalar& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    /// Euclidean division (exact backend): *this = q*d + r, deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Monic gcd, exact backend.
    static Poly gcd(Poly a, Poly b);

    Poly to_float() const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();

    Backend backend_;
    std::vector<Scalar> coeffs_;
};

}  // namespace darboux

#endif
