#ifndef DARBOUX_JACOBI_HPP
#define DARBOUX_JACOBI_HPP

#include <vector>

#include "darboux/matrix.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// Monic Jacobi matrix: 1's on the superdiagonal, b_j on the diagonal,
/// c_j > 0 on the subdiagonal. Stored as finitely many rows of the
/// semi-infinite operator.
class MonicJacobi {
public:
    MonicJacobi(std::vector<Scalar> b, std::vector<Scalar> c);

    int rows() const { return static_cast<int>(b_.size()); }
    Backend backend() const;
    const std::vector<Scalar>& b() const { return b_; }
    const std::vector<Scalar>& c() const { return c_; }
    const Scalar& b(int j) const { return b_.at(j); }
    const Scalar& c(int j) const { return c_.at(j); }

    /// Leading n x n truncation as a dense matrix.
    ScalarMatrix truncation(int n) const;

    MonicJacobi to_float() const;
    bool operator==(const MonicJacobi& o) const;

    /// 2-periodic matrix of the unbounded-Christoffel example:
    /// b = (1, 0, 1, 0, ...), c = 1.
    static MonicJacobi two_periodic(int rows);
    /// b = 0, c = 1/4 (Chebyshev polynomials of the second kind).
    static MonicJacobi chebyshev_u(int rows);

private:
    std::vector<Scalar> b_, c_;
};

}  // namespace darboux

#endif
