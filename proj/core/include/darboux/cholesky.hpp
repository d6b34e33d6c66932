#ifndef DARBOUX_CHOLESKY_HPP
#define DARBOUX_CHOLESKY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "darboux/jacobi.hpp"
#include "darboux/matrix.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// Symmetric Jacobi matrix: diag entries and positive offdiagonal sqrt(c_j).
struct SymJacobi {
    std::vector<Scalar> diag;
    std::vector<Scalar> offdiag;

    int rows() const { return static_cast<int>(diag.size()); }
    Backend backend() const { return common_backend(diag); }
    ScalarMatrix truncation(int n) const;
    /// The monic form J with b = diag, c = offdiag^2.
    MonicJacobi monic() const;
};

/// Generalized Cholesky factors J_s = L Lambda L^T: unit block lower L with
/// one scalar per subdiagonal block, and symmetric Lambda blocks which are
/// 1x1 (l0) or 2x2 [[0, l0], [l0, l1]].
struct CholeskyFactors {
    struct Lambda {
        Scalar l0;
        std::optional<Scalar> l1;  // present iff the block is 2x2
    };
    std::vector<int> kseq;
    std::vector<Scalar> lhat;  // \hat l_{j+1} for j = 0 .. depth-2
    std::vector<Lambda> lambdas;

    int depth() const { return static_cast<int>(kseq.size()); }
    int dim() const;
    ScalarMatrix lower_dense() const;
    ScalarMatrix lambda_dense() const;
};

/// J_s = Psi^{-1} J Psi with Psi = diag(1, sqrt(c_0), sqrt(c_0 c_1), ...).
/// Returns the diagonal of Psi. Stays exact when every c_j is a perfect
/// square of a rational, otherwise the result is on the float backend.
std::pair<SymJacobi, std::vector<Scalar>> symmetrize(const MonicJacobi& J);

/// Generalized Cholesky decomposition, derived from the block LU
/// factorization of the monic form.
CholeskyFactors generalized_cholesky(const SymJacobi& Js, int depth);

}  // namespace darboux

#endif
