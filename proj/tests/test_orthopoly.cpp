#include <doctest.h>

#include <random>

#include "darboux/errors.hpp"
#include "darboux/gjm.hpp"
#include "darboux/moments.hpp"
#include "darboux/orthopoly.hpp"
#include "test_util.hpp"

using namespace darboux;
using testutil::S;

TEST_CASE("classical recurrence: first steps") {
    std::mt19937_64 rng(7);
    MonicJacobi J = testutil::random_jacobi(rng, 6);
    PolyPair pp = classical_polys(J, 3);
    CHECK(pp.P[0] == testutil::poly_i({1}));
    CHECK(pp.P[1] == Poly({-J.b(0), S(1)}));
    CHECK(pp.Q[1] == testutil::poly_i({1}));

    PolyPair cheb = classical_polys(MonicJacobi::chebyshev_u(6), 3);
    CHECK(cheb.P[2] == Poly({S(-1, 4), S(0), S(1)}));
    CHECK(cheb.Q[2] == testutil::poly_i({0, 1}));

    PolyPair p2 = classical_polys(MonicJacobi::two_periodic(6), 3);
    CHECK(p2.P[2] == testutil::poly_i({-1, -1, 1}));
}

TEST_CASE("GJM recurrence: first step and classical specialization") {
    std::mt19937_64 rng(11);
    GJM G = testutil::random_gjm(rng, 4);
    GJMPolyPair pp = gjm_polys(G, 2);
    CHECK(pp.P[1] == G.pfrak(0));
    CHECK(pp.Q[1] == Poly::constant(S(G.block(0).eps)));

    MonicJacobi J = testutil::random_jacobi(rng, 6);
    GJMPolyPair g = gjm_polys(GJM::from_jacobi(J), 5);
    PolyPair c = classical_polys(J, 5);
    for (int j = 0; j <= 5; ++j) {
        CHECK(g.P[j] == c.P[j]);
        CHECK(g.Q[j] == c.Q[j]);
    }
}

TEST_CASE("determinant formula for the first-kind polynomials") {
    CHECK(det_formula_P(testutil::moments({S(1), S(0), S(1, 4)}), 1) ==
          testutil::poly_i({0, 1}));
    CHECK(det_formula_P(testutil::moments({S(0), S(1, 4), S(0), S(1, 8)}), 2) ==
          Poly({S(-1, 2), S(0), S(1)}));
    // shifted 2-periodic prefix
    CHECK(det_formula_P(testutil::moments({S(1), S(2), S(3)}), 1) ==
          testutil::poly_i({-2, 1}));
    CHECK_THROWS_AS(det_formula_P(testutil::moments({S(0), S(0)}), 1),
                    SingularHankel);
}

TEST_CASE("characteristic polynomial oracle on small truncations") {
    auto [p2, q2] = charpoly_oracle(MonicJacobi::chebyshev_u(4), 2);
    CHECK(p2 == Poly({S(-1, 4), S(0), S(1)}));
    CHECK(q2 == testutil::poly_i({0, 1}));

    auto [pp2, qq2] = charpoly_oracle(MonicJacobi::two_periodic(4), 2);
    CHECK(pp2 == testutil::poly_i({-1, -1, 1}));

    auto [p0, q0] = charpoly_oracle(MonicJacobi::chebyshev_u(4), 0);
    CHECK(p0 == testutil::poly_i({1}));
    CHECK(q0.is_zero());
}

TEST_CASE("recurrence equals charpoly oracle and determinant formula") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        GJM G = testutil::random_gjm(rng, 5);
        GJMPolyPair pp = gjm_polys(G, 5);
        for (int j = 0; j <= 5; ++j) {
            auto [p, q] = charpoly_oracle(G, j);
            CHECK(pp.P[j] == p);
            if (j >= 1) CHECK(pp.Q[j] == q);
        }
        // determinant-formula route on the matrix's own moments
        auto ns = G.nseq();
        MomentSequence s = gjm_moments(G, 2 * ns[5]);
        for (int j = 1; j <= 5; ++j)
            CHECK(det_formula_P(s, ns[j]) == pp.P[j]);
    }
}

TEST_CASE("first and second kind polynomials share no factors") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 12; ++trial) {
        GJM G = testutil::random_gjm(rng, 5);
        GJMPolyPair pp = gjm_polys(G, 5);
        for (int j = 1; j <= 5; ++j) {
            CHECK(Poly::gcd(pp.P[j], pp.Q[j]).degree() == 0);
            if (j < 5) CHECK(Poly::gcd(pp.P[j], pp.P[j + 1]).degree() == 0);
        }
    }
}

TEST_CASE("Q(0) matches the bordered determinant formula") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 12; ++trial) {
        GJM G = testutil::random_gjm(rng, 4);
        GJMPolyPair pp = gjm_polys(G, 4);
        auto ns = G.nseq();
        MomentSequence s = gjm_moments(G, 2 * ns[4]);
        for (int j = 1; j <= 4; ++j)
            CHECK(bordered_Q0(s, ns[j]) == pp.Q[j].eval(S(0)));
    }
    // classical case: Chebyshev Q_2 = lambda vanishes at 0
    MomentSequence cheb =
        testutil::moments({S(1), S(0), S(1, 4), S(0), S(1, 8)});
    CHECK(bordered_Q0(cheb, 2) == S(0));
    CHECK(bordered_Q0(cheb, 1) == S(1));
}

TEST_CASE("P(0) matches the shifted Hankel formula") {
    std::mt19937_64 rng(666);
    for (int trial = 0; trial < 8; ++trial) {
        MonicJacobi J = testutil::random_jacobi(rng, 6);
        PolyPair pp = classical_polys(J, 5);
        MomentSequence s = moments_from_jacobi(J, 11);
        for (int j = 1; j <= 5; ++j)
            CHECK(det_formula_P0(s, j) == pp.P[j].eval(S(0)));
    }
}
