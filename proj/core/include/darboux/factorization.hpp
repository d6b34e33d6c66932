#ifndef DARBOUX_FACTORIZATION_HPP
#define DARBOUX_FACTORIZATION_HPP

#include <optional>
#include <variant>
#include <vector>

#include "darboux/gjm.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/matrix.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

enum class FactorKind { LUJacobi, ULJacobi, LUGjm, ULGjm };
enum class ProductOrder { AsFactored, Swapped };

/// Per-block payload of one factor pair. The block shapes are determined
/// entirely by (kind, kseq); only the defining scalars are stored and dense
/// matrices are materialized on demand.
///  - LUJacobi / ULGjm: diagonal u0 (plus u1 when k = 2) of the upper factor,
///    unit-lower factor with l in the top-left corner of each subdiagonal
///    block.
///  - ULJacobi / LUGjm: diagonal u0 of the upper factor (the (1,1) entry of a
///    k = 2 block is 0), lower factor with unit diagonal blocks carrying e in
///    the (1,0) corner and subdiagonal blocks with l in the bottom-right
///    corner.
/// `l` on entry j is the coupling between diagonal blocks j and j+1 and is
/// absent on the last entry.
struct FactorEntry {
    int k = 1;
    Scalar u0;
    std::optional<Scalar> u1;
    std::optional<Scalar> e;
    std::optional<Scalar> l;
};

class BlockFactors {
public:
    BlockFactors(FactorKind kind, std::vector<FactorEntry> entries,
                 std::optional<Scalar> param = std::nullopt,
                 int source_eps0 = 1);

    FactorKind kind() const { return kind_; }
    int depth() const { return static_cast<int>(entries_.size()); }
    const std::vector<FactorEntry>& entries() const { return entries_; }
    const FactorEntry& entry(int j) const { return entries_.at(j); }
    const std::optional<Scalar>& param() const { return param_; }
    Backend backend() const { return entries_.front().u0.backend(); }
    /// eps_0 of the factored GJM (GJM kinds only); needed to reassemble the
    /// sign sequence, which the factor entries alone do not determine.
    int source_eps0() const { return source_eps0_; }

    std::vector<int> kseq() const;
    std::vector<int> nseq() const;
    int dim() const;

    /// Dense lower and upper factors (dimension n_depth).
    ScalarMatrix lower_dense() const;
    ScalarMatrix upper_dense() const;

private:
    FactorKind kind_;
    std::vector<FactorEntry> entries_;
    std::optional<Scalar> param_;
    int source_eps0_;
};

using ProductResult = std::variant<MonicJacobi, GJM>;

/// Block LU factorization J = L U driven by the normal indices of the
/// shifted moment sequence (detected through the zeros of P_n(0)).
BlockFactors lu_jacobi(const MonicJacobi& J, int depth);

/// Block UL factorization J = U L with free parameter s_{-1}; the block
/// structure follows the zeros of (Q_n - s_{-1} P_n)(0).
BlockFactors ul_jacobi(const MonicJacobi& J, const Scalar& s_minus1, int depth);

/// Block UL factorization of a GJM seeded by u_0^{(0)} = 1/s_{-1}.
BlockFactors ul_gjm(const GJM& G, const Scalar& s_minus1, int depth);

/// Block LU factorization of a GJM; requires P_j(0) != 0 along the way.
BlockFactors lu_gjm(const GJM& G, int depth);

/// AsFactored reassembles the factored matrix (an identity check); Swapped
/// multiplies the factors the other way around, which is the Darboux
/// transform itself. The result is truncated to the rows/blocks that are
/// fully determined by the stored factors.
ProductResult block_product(const BlockFactors& f, ProductOrder order);

/// Swapped product of Jacobi-side factors that exhaust a *finite* operator
/// (a rational Markov function, e.g. finitely many atoms): the square
/// product keeps all `depth` diagonal blocks; the trailing coupling is
/// absent.
GJM gjm_square_product(const BlockFactors& f);

/// J = LU -> UL. Returns `depth` GJM blocks, all with couplings. The
/// returned matrix represents the normalized transform; `scale_out` (when
/// given) receives the normalization scale |s_{n_1}| that was divided out.
GJM christoffel(const MonicJacobi& J, int depth, Scalar* scale_out = nullptr);

/// GJM = UL -> LU: back to a monic Jacobi matrix (n_depth rows).
MonicJacobi inverse_christoffel(const GJM& G, const Scalar& s_minus1, int depth);

/// J = UL(s_{-1}) -> LU. Returns `depth` GJM blocks, all with couplings.
GJM geronimus(const MonicJacobi& J, const Scalar& s_minus1, int depth);

/// GJM = LU -> UL: back to a monic Jacobi matrix (n_{depth-1} rows).
MonicJacobi inverse_geronimus(const GJM& G, int depth);

}  // namespace darboux

#endif
