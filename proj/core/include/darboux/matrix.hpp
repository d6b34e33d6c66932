#ifndef DARBOUX_MATRIX_HPP
#define DARBOUX_MATRIX_HPP

#include <vector>

#include "darboux/poly.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// Small dense matrix of scalars. Only needs to be good enough for block
/// materialization, determinant oracles and truncated-operator arithmetic at
/// desk scale.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0), backend_(Backend::Exact) {}
    ScalarMatrix(int rows, int cols, Backend b);

    static ScalarMatrix identity(int n, Backend b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Backend backend() const { return backend_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix transpose() const;
    bool operator==(const ScalarMatrix& o) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;            // A v
    std::vector<Scalar> apply_transposed(const std::vector<Scalar>& v) const; // A^T v

    /// Determinant by exact Gaussian elimination (float backend: partially
    /// pivoted LU). Empty matrix has determinant 1.
    Scalar det() const;

    /// Hadamard bound on |det|, used as the scale hint for float-backend
    /// ambiguity tests.
    double hadamard_bound() const;

    /// det(lambda*I - A) via exact evaluation at integer nodes plus Newton
    /// interpolation; independent of any recurrence. Exact backend only.
    Poly charpoly() const;

    ScalarMatrix to_float() const;
    double max_abs() const;
    bool approx_equal(const ScalarMatrix& o, double tol) const;

private:
    int rows_, cols_;
    Backend backend_;
    std::vector<Scalar> a_;
};

}  // namespace darboux

#endif
