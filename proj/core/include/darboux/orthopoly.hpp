#ifndef DARBOUX_ORTHOPOLY_HPP
#define DARBOUX_ORTHOPOLY_HPP

#include <utility>
#include <vector>

#include "darboux/gjm.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/poly.hpp"

namespace darboux {

/// Monic polynomials of the first kind and the second-kind companions for a
/// classical monic Jacobi matrix, indices 0..m.
struct PolyPair {
    std::vector<Poly> P, Q;
};

/// First and second kind polynomials of a generalized Jacobi matrix.
struct GJMPolyPair {
    std::vector<Poly> P, Q;
    int eps0 = 1;
};

/// Three-term recurrence with P_{-1}=0, P_0=1, Q_{-1}=-1, Q_0=0, c_{-1}=1.
PolyPair classical_polys(const MonicJacobi& J, int m);

/// Block recurrence c_{j-1} y_{j-1} - p_j y_j + y_{j+1} = 0 with c_{-1}=eps_0.
GJMPolyPair gjm_polys(const GJM& G, int m);

/// The (nj+1)-column determinant formula for the monic first-kind polynomial
/// of degree nj, divided by the leading Hankel determinant. Independent
/// oracle against the recurrence.
Poly det_formula_P(const MomentSequence& s, int nj);

/// P_j(0) via the shifted Hankel determinant.
Scalar det_formula_P0(const MomentSequence& s, int nj);

/// Q_j(0) via the bordered Hankel determinant.
Scalar bordered_Q0(const MomentSequence& s, int nj);

/// (det(lambda - J_[0,j-1]), eps_0 det(lambda - J_[1,j-1])) by dense
/// characteristic polynomials; j = 0 gives (1, 0).
std::pair<Poly, Poly> charpoly_oracle(const GJM& G, int j);
std::pair<Poly, Poly> charpoly_oracle(const MonicJacobi& J, int j);

}  // namespace darboux

#endif
