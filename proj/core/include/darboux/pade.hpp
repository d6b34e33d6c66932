#ifndef DARBOUX_PADE_HPP
#define DARBOUX_PADE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "darboux/jacobi.hpp"
#include "darboux/matrix.hpp"
#include "darboux/moments.hpp"
#include "darboux/rational_fn.hpp"
#include "darboux/scalar.hpp"

namespace darboux {

/// Diagonal Pade approximant [n_j/n_j] of the function with moment prefix s:
/// -Q_j/P_j of the associated generalized Jacobi matrix, rescaled by the
/// normalization of s.
RationalFn diagonal_pade(const MomentSequence& s, int j);

/// Number of leading expansion coefficients of f that agree with
/// -sum s_i/lambda^{i+1}, capped at the available moments.
int pade_order_check(const RationalFn& f, const MomentSequence& s);

/// -(Q_n + tau Q_{n-1}) / (P_n + tau P_{n-1}) for the classical polynomials
/// of J (all indices normal), n = j.
RationalFn modified_pade(const MonicJacobi& J, const Scalar& tau, int j);

/// Diagonal approximant of (F - s_{-1})/lambda: the modified approximant at
/// tau_j = -(Q_j(0) - s_{-1}P_j(0)) / (Q_{j-1}(0) - s_{-1}P_{j-1}(0)),
/// shifted by -s_{-1} and divided by lambda. `tau_out` receives tau_j.
RationalFn dplus_pade(const MonicJacobi& J, const Scalar& s_minus1, int j,
                      Scalar* tau_out = nullptr);

/// Denominator roots via a balanced companion matrix (float backend).
std::vector<std::complex<double>> poles(const RationalFn& f);

/// Roots of an arbitrary polynomial, same route.
std::vector<std::complex<double>> companion_roots(const Poly& p);

/// Eigenvalues of a dense real matrix (balanced, non-symmetric solver).
std::vector<std::complex<double>> dense_eigenvalues(const ScalarMatrix& m);

/// Eigenvalues of the symmetric truncation of J with tau added to the last
/// diagonal entry: the pole positions of the modified approximant.
std::vector<double> modified_pole_oracle(const MonicJacobi& J, double tau,
                                         int j);

enum class DiagKind { C, G };

/// Boundedness ratio data: |u_0^{(j)}| of the LU factorization (kind C) or
/// |l_j| of the UL factorization (kind G), indexed 1-based like the scalar
/// u/l sequences. Boundedness of these ratios over all j is equivalent to
/// locally uniform convergence of the diagonal approximants, but finite
/// windows cannot certify a supremum, so no verdict is asserted; `exceeded`
/// only reports whether any ratio passed the configurable threshold.
struct DiagnosticsReport {
    std::vector<std::pair<int, Scalar>> ratios;
    Scalar running_max;
    std::vector<std::pair<int, double>> pole_radii;  // (block j, max |pole|)
    double verdict_threshold = 0.0;
    bool exceeded = false;
};

DiagnosticsReport boundedness_diagnostic(const MonicJacobi& J, DiagKind kind,
                                         std::optional<Scalar> s_minus1,
                                         int depth, bool with_poles = true,
                                         double threshold = 1e6);

struct ScanRow {
    int j = 0;
    int nj = 0;
    std::complex<double> lambda;
    std::complex<double> approx;
    double abs_error = 0.0;
    double max_pole_radius = 0.0;
    bool pole_collision = false;
};

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

/// |F^[n_j/n_j](lambda) - F(lambda)| over a grid, one row per (j, lambda).
/// A scan point within tolerance of an approximant pole flags the row
/// instead of failing. Stops early if the moment sequence terminates
/// rationally.
std::vector<ScanRow> convergence_scan(const ComplexFn& oracle,
                                      const MomentSequence& s,
                                      const std::vector<std::complex<double>>& lambdas,
                                      int jmax);

/// Markov function of the measure (atoms exactly, named parts in closed
/// form), analytic branch that vanishes at infinity.
ComplexFn markov_oracle(const MeasureSpec& m);

}  // namespace darboux

#endif
