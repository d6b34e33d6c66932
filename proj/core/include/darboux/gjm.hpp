#ifndef DARBOUX_GJM_HPP
#define DARBOUX_GJM_HPP

#include <optional>
#include <vector>

#include "darboux/jacobi.hpp"
#include "darboux/matrix.hpp"
#include "darboux/moments.hpp"
#include "darboux/poly.hpp"
#include "darboux/rational_fn.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// One block of a monic generalized Jacobi matrix: the monic polynomial
/// p(lambda) = lambda^k + p1*lambda + p0 of degree k in {1,2} (p1 present iff
/// k = 2), the sign eps = +-1, and the coupling c = eps_j eps_{j+1} b_j^2 to
/// the next block (absent on a trailing block whose successor is unknown).
struct GJMBlock {
    int k = 1;
    Scalar p0;
    std::optional<Scalar> p1;
    std::optional<Scalar> c;
    int eps = 1;

    Scalar b2() const;  // |c|
};

class GJM {
public:
    explicit GJM(std::vector<GJMBlock> blocks);

    int depth() const { return static_cast<int>(blocks_.size()); }
    const GJMBlock& block(int j) const { return blocks_.at(j); }
    const std::vector<GJMBlock>& blocks() const { return blocks_; }
    Backend backend() const;

    std::vector<int> kseq() const;
    /// Cumulative indices n_0 = 0, n_1, ..., n_depth.
    std::vector<int> nseq() const;
    int dim() const;  // n_depth

    /// The monic polynomial p_j as a Poly.
    Poly pfrak(int j) const;
    /// Coupling c_j; throws InsufficientDepth when absent.
    Scalar coupling(int j) const;

    /// Dense matrix of blocks [first, last), sizes per the block shapes.
    ScalarMatrix truncation(int first_block, int last_block) const;

    GJM prefix(int nblocks) const;

    static GJM from_jacobi(const MonicJacobi& J);
    bool is_classical() const;  // all k = 1, all eps = +1
    MonicJacobi to_jacobi() const;

    GJM to_float() const;
    bool operator==(const GJM& o) const;

private:
    std::vector<GJMBlock> blocks_;
};

/// Block-diagonal Gram matrix defining the (possibly indefinite) inner
/// product in which a GJM is formally symmetric.
struct GramMatrix {
    std::vector<ScalarMatrix> blocks;
    ScalarMatrix dense() const;
};

struct NormalizationRecord {
    Scalar scale;     // |s_{n_1 - 1}| of the input sequence
    bool normalized;  // scale == 1
};

/// P-fraction (Schur) construction of the GJM from a moment prefix. The
/// input is normalized first; the applied scale is returned. Every block's
/// monic polynomial comes from the Hankel determinant formula; the series
/// arithmetic only produces the successor expansion.
std::pair<GJM, NormalizationRecord> schur_pfraction(const MomentSequence& s,
                                                    int depth);

GramMatrix gram(const GJM& G, int depth);

/// m-function of the shortened matrix: -Q_j / P_j.
RationalFn m_function(const GJM& G, int j);

/// Reconstructs s_0..s_{count-1} from the matrix via the Gram inner product.
MomentSequence gjm_moments(const GJM& G, int count);

}  // namespace darboux

#endif
