#ifndef DARBOUX_MOMENTS_HPP
#define DARBOUX_MOMENTS_HPP

#include <optional>
#include <vector>

#include "darboux/jacobi.hpp"
#include "darboux/scalar.hpp"
#include "darboux/series.hpp"

namespace darboux {

/// Finite prefix s_0..s_m of the moment expansion F ~ -sum s_j/lambda^{j+1},
/// optionally carrying the free prepended moment s_{-1} used by the
/// UL-factorization side.
struct MomentSequence {
    std::vector<Scalar> s;
    std::optional<Scalar> s_minus1;

    MomentSequence() = default;
    explicit MomentSequence(std::vector<Scalar> moments,
                            std::optional<Scalar> sm1 = std::nullopt)
        : s(std::move(moments)), s_minus1(std::move(sm1)) {}

    int size() const { return static_cast<int>(s.size()); }
    const Scalar& at(int k) const { return s.at(k); }
    Backend backend() const { return common_backend(s); }
    MomentSequence to_float() const;

    /// The expansion of the function itself, -sum s_j/lambda^{j+1}.
    Series function_series() const;
};

struct NormalIndexReport {
    std::vector<int> indices;        // normal indices n_1 < n_2 < ... <= nmax
    std::vector<int> gaps;           // k_j = n_{j+1} - n_j with n_0 = 0
    std::vector<Scalar> hankel_dets; // d_n for every tested n = 1..nmax
    bool gap_exceeds_two = false;
};

/// Discrete measure plus an optional named absolutely continuous part
/// (summed when both are present). Region metadata feeds scan configuration
/// only.
struct MeasureSpec {
    struct Atom {
        Scalar t;  // location
        Scalar a;  // weight > 0
    };
    enum class Named { None, ChebyshevU, Arcsine };

    std::vector<Atom> atoms;
    Named named = Named::None;
    std::optional<double> support_min, support_max;  // endpoints of E
    std::optional<double> alpha, beta;               // gap interval around 0
};

/// det (s_{i+k})_{i,k=0}^{n-1}; n = 0 gives 1. Needs 2n-1 moments.
Scalar hankel_det(const MomentSequence& s, int n);

/// All normal indices up to nmax per the Hankel-determinant definition.
/// Float backend: a determinant within tolerance of zero but not exactly
/// zero raises FloatAmbiguous.
NormalIndexReport normal_indices(const MomentSequence& s, int nmax);

MomentSequence moments_from_measure(const MeasureSpec& m, int count);

/// s_k = e_0^T J^k e_0 on a sufficiently large truncation (s_0 = 1).
MomentSequence moments_from_jacobi(const MonicJacobi& J, int count);

/// Drops s_0: the moment prefix of lambda*F(lambda) + s_0.
MomentSequence shift_for_christoffel(const MomentSequence& s);

/// Prepends the free moment: inverse of the shift.
MomentSequence unshift(const MomentSequence& s, const Scalar& s_minus1);

}  // namespace darboux

#endif
