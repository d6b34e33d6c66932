#include <benchmark/benchmark.h>

#include "darboux/factorization.hpp"
#include "darboux/gjm.hpp"
#include "darboux/moments.hpp"
#include "darboux/orthopoly.hpp"
#include "darboux/pade.hpp"

using namespace darboux;

static void BM_LuJacobi(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    MonicJacobi J = MonicJacobi::two_periodic(depth + 4);
    for (auto _ : state) benchmark::DoNotOptimize(lu_jacobi(J, depth));
}
BENCHMARK(BM_LuJacobi)->Arg(8)->Arg(32)->Arg(64);

static void BM_Christoffel(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    MonicJacobi J = MonicJacobi::chebyshev_u(2 * depth + 4);
    for (auto _ : state) benchmark::DoNotOptimize(christoffel(J, depth));
}
BENCHMARK(BM_Christoffel)->Arg(4)->Arg(16);

static void BM_SchurPfraction(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    MeasureSpec m;
    m.named = MeasureSpec::Named::ChebyshevU;
    MomentSequence s = moments_from_measure(m, 4 * depth + 2);
    for (auto _ : state) benchmark::DoNotOptimize(schur_pfraction(s, depth));
}
BENCHMARK(BM_SchurPfraction)->Arg(4)->Arg(12);

static void BM_CompanionPoles(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    MonicJacobi J = MonicJacobi::two_periodic(2 * depth + 4);
    GJM g = christoffel(J, depth);
    Poly p = gjm_polys(g, depth).P[depth].to_float();
    for (auto _ : state) benchmark::DoNotOptimize(companion_roots(p));
}
BENCHMARK(BM_CompanionPoles)->Arg(16)->Arg(40);

BENCHMARK_MAIN();
