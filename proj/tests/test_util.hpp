#ifndef DARBOUX_TESTS_TEST_UTIL_HPP
#define DARBOUX_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "darboux/gjm.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/poly.hpp"
#include "darboux/scalar.hpp"
#include "darboux/series.hpp"

namespace testutil {

using darboux::Backend;
using darboux::GJM;
using darboux::GJMBlock;
using darboux::MomentSequence;
using darboux::MonicJacobi;
using darboux::Poly;
using darboux::Scalar;
using darboux::Series;

inline Scalar S(long n, long d = 1) { return Scalar::exact(n, d); }

inline Poly poly(std::vector<Scalar> coeffs) { return Poly(std::move(coeffs)); }

inline Poly poly_i(std::initializer_list<long> coeffs) {
    std::vector<Scalar> c;
    for (long x : coeffs) c.push_back(S(x));
    return Poly(std::move(c));
}

inline MomentSequence moments(std::initializer_list<Scalar> xs) {
    return MomentSequence(std::vector<Scalar>(xs));
}

// --- random rational data ----------------------------------------------------

inline Scalar random_rational(std::mt19937_64& rng, long num_abs, long den_max) {
    std::uniform_int_distribution<long> num(-num_abs, num_abs);
    std::uniform_int_distribution<long> den(1, den_max);
    return Scalar::exact(num(rng), den(rng));
}

inline Scalar random_positive_rational(std::mt19937_64& rng, long num_max,
                                       long den_max) {
    std::uniform_int_distribution<long> num(1, num_max);
    std::uniform_int_distribution<long> den(1, den_max);
    return Scalar::exact(num(rng), den(rng));
}

/// b_j in [-1,1] (denominators <= 8), c_j in (0,1].
inline MonicJacobi random_jacobi(std::mt19937_64& rng, int rows) {
    std::vector<Scalar> b, c;
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> cnum(1, 8);
    for (int j = 0; j < rows; ++j) b.push_back(Scalar::exact(num(rng), 8));
    for (int j = 0; j + 1 < rows; ++j) c.push_back(Scalar::exact(cnum(rng), 8));
    return MonicJacobi(std::move(b), std::move(c));
}

/// Formally valid generalized Jacobi matrix with random block degrees,
/// rational polynomial data and a consistent sign chain.
inline GJM random_gjm(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kdist(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<GJMBlock> blocks;
    int eps = sign(rng) ? 1 : -1;
    for (int j = 0; j < depth; ++j) {
        GJMBlock b;
        b.k = kdist(rng);
        b.p0 = random_rational(rng, 8, 4);
        if (b.k == 2) b.p1 = random_rational(rng, 8, 4);
        b.eps = eps;
        Scalar c = random_positive_rational(rng, 8, 4);
        if (sign(rng)) c = -c;
        b.c = c;
        eps = eps * c.sign();
        blocks.push_back(std::move(b));
    }
    return GJM(std::move(blocks));
}

// --- quadrature oracles -------------------------------------------------------

/// Integral of g over [-1,1] against the Chebyshev-U weight (2/pi)sqrt(1-t^2),
/// via t = cos(theta) (smooth periodic integrand, trapezoid converges fast).
inline double chebyshev_u_integral(const std::function<double(double)>& g,
                                   int n = 4000) {
    const double pi = 3.14159265358979323846;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double th = pi * (i + 0.5) / n;
        double t = std::cos(th);
        acc += g(t) * (2.0 / pi) * std::sin(th) * std::sin(th);
    }
    return acc * pi / n;
}

/// Same against the arcsine weight 1/(pi sqrt(1-t^2)).
inline double arcsine_integral(const std::function<double(double)>& g,
                               int n = 4000) {
    const double pi = 3.14159265358979323846;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double th = pi * (i + 0.5) / n;
        acc += g(std::cos(th)) / pi;
    }
    return acc * pi / n;
}

// --- Laurent bookkeeping for the reciprocal property -------------------------

/// Coefficient map of f * (poly + tail) by exponent of z = 1/lambda
/// (exponent e <= 0 are the lambda^{-e} terms), restricted to exponents
/// where every contribution is known.
inline std::map<int, Scalar> laurent_product(const Series& f, const Poly& p,
                                             const Series& tail,
                                             int* max_trusted) {
    std::map<int, Scalar> acc;
    const Backend bk = f.backend();
    auto add = [&](int e, const Scalar& v) {
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(e, v);
        else
            it->second += v;
    };
    for (int i = 0; i < f.order(); ++i)
        for (int k = 0; k <= p.degree(); ++k)
            add(i + 1 - k, f.coeffs()[i] * p.coeff(k));
    Series ft = f * tail;
    for (int t = 0; t < ft.order(); ++t) add(t + 1, ft.coeffs()[t]);
    // f*poly is trusted for e <= order - deg(p); f*tail through its order.
    int lim_poly = f.order() - std::max(p.degree(), 0);
    int lim_tail = ft.order();
    *max_trusted = std::min(lim_poly, lim_tail);
    (void)bk;
    return acc;
}

}  // namespace testutil

#endif
