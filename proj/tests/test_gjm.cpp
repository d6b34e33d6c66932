#include <doctest.h>

#include <algorithm>
#include <random>

#include "darboux/errors.hpp"
#include "darboux/factorization.hpp"
#include "darboux/gjm.hpp"
#include "darboux/moments.hpp"
#include "darboux/orthopoly.hpp"
#include "darboux/pade.hpp"
#include "test_util.hpp"

using namespace darboux;
using testutil::S;

TEST_CASE("Schur construction recovers the classical Chebyshev matrix") {
    MeasureSpec m;
    m.named = MeasureSpec::Named::ChebyshevU;
    MomentSequence s = moments_from_measure(m, 16);
    auto [G, rec] = schur_pfraction(s, 4);
    CHECK(rec.normalized);
    CHECK(rec.scale == S(1));
    REQUIRE(G.depth() == 4);
    for (int j = 0; j < 4; ++j) {
        CHECK(G.block(j).k == 1);
        CHECK(G.block(j).p0 == S(0));
        CHECK(G.block(j).eps == 1);
        if (G.block(j).c) CHECK(*G.block(j).c == S(1, 4));
    }
    CHECK(G.block(0).c.has_value());
    CHECK(G.to_jacobi() == MonicJacobi::chebyshev_u(4));
}

TEST_CASE("Schur construction on the shifted Chebyshev sequence") {
    auto s = testutil::moments({S(0), S(1, 4), S(0), S(1, 8), S(0), S(5, 64)});
    auto [G, rec] = schur_pfraction(s, 1);
    CHECK(rec.scale == S(1, 4));
    CHECK(!rec.normalized);
    CHECK(G.block(0).k == 2);
    CHECK(G.block(0).p0 == S(-1, 2));  // p = lambda^2 - 1/2
    CHECK(*G.block(0).p1 == S(0));
    CHECK(G.block(0).eps == 1);
}

TEST_CASE("a one-atom sequence terminates rationally") {
    auto s = testutil::moments(
        {S(1), S(1), S(1), S(1), S(1), S(1), S(1), S(1)});
    CHECK_THROWS_AS(schur_pfraction(s, 2), RationalTermination);
    auto [G, rec] = schur_pfraction(s, 1);
    CHECK(G.block(0).k == 1);
    CHECK(G.block(0).p0 == S(-1));  // p = lambda - 1
    CHECK(!G.block(0).c.has_value());
}

TEST_CASE("a gap larger than two is rejected") {
    auto s = testutil::moments({S(0), S(0), S(1), S(0), S(0), S(0)});
    CHECK_THROWS_AS(schur_pfraction(s, 1), GapExceedsTwo);
}

TEST_CASE("insufficient moments are reported") {
    auto s = testutil::moments({S(1), S(0)});
    CHECK_THROWS_AS(schur_pfraction(s, 2), InsufficientMoments);
}

TEST_CASE("gram matrix blocks") {
    // all k = 1, eps = 1: identity
    GJM cl = GJM::from_jacobi(MonicJacobi::chebyshev_u(4));
    CHECK(gram(cl, 4).dense() == ScalarMatrix::identity(4, Backend::Exact));

    // one k = 2 block with p1 = 0: [[0,1],[1,0]]
    GJMBlock b;
    b.k = 2;
    b.p0 = S(-1, 2);
    b.p1 = S(0);
    b.eps = 1;
    GJM single({b});
    ScalarMatrix g = gram(single, 1).dense();
    CHECK(g.at(0, 0) == S(0));
    CHECK(g.at(0, 1) == S(1));
    CHECK(g.at(1, 0) == S(1));
    CHECK(g.at(1, 1) == S(0));

    // first block of the Christoffel transform of Chebyshev
    GJM gc = christoffel(MonicJacobi::chebyshev_u(8), 2);
    ScalarMatrix g0 = gram(gc, 1).dense();
    CHECK(g0.at(0, 1) == S(1));
    CHECK(g0.at(1, 1) == S(0));
}

TEST_CASE("m-function of small truncations") {
    std::mt19937_64 rng(5);
    MonicJacobi J = testutil::random_jacobi(rng, 4);
    RationalFn m1 = m_function(GJM::from_jacobi(J), 1);
    // -Q_1/P_1 = -1/(lambda - b_0) = 1/(b_0 - lambda)
    CHECK(m1.num == testutil::poly_i({-1}));
    CHECK(m1.den == Poly({-J.b(0), S(1)}));

    RationalFn m2 = m_function(GJM::from_jacobi(MonicJacobi::chebyshev_u(4)), 2);
    CHECK(m2.eval(S(2)) == S(-8, 15));
}

TEST_CASE("order of contact of the m-function") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        GJM G = testutil::random_gjm(rng, 4);
        auto ns = G.nseq();
        MomentSequence s = gjm_moments(G, 2 * ns[4]);
        for (int j = 1; j < 4; ++j) {
            RationalFn m = m_function(G, j);
            int contact = pade_order_check(m, s);
            CHECK(contact >= 2 * ns[j] + G.block(j).k - 1);
        }
    }
}

TEST_CASE("moment reconstruction: classical case and shifted relation") {
    MonicJacobi J = MonicJacobi::two_periodic(8);
    GJM cl = GJM::from_jacobi(J);
    CHECK(gjm_moments(cl, 12).s == moments_from_jacobi(J, 12).s);

    // Christoffel of Chebyshev: reconstructed moments are the shifted ones
    // rescaled by eps_0 u_0^{(0)} = 1/4.
    MonicJacobi cheb = MonicJacobi::chebyshev_u(16);
    GJM gc = christoffel(cheb, 6);
    MomentSequence got = gjm_moments(gc, 12);
    MomentSequence s = moments_from_jacobi(cheb, 13);
    for (int k = 0; k < 12; ++k) CHECK(got.s[k] == s.s[k + 1] / S(1, 4));
}

TEST_CASE("moment reconstruction is stable in the truncation") {
    std::mt19937_64 rng(23);
    GJM G = testutil::random_gjm(rng, 6);
    auto full = gjm_moments(G, 8);
    for (int m = 3; m <= 6; ++m) {
        GJM pre = G.prefix(m);
        int nm = pre.dim();
        int count = std::min(8, 2 * nm);
        auto part = gjm_moments(pre, count);
        for (int k = 0; k < count; ++k) CHECK(part.s[k] == full.s[k]);
    }
}

TEST_CASE("self-consistency: Schur construction inverts moment reconstruction") {
    std::mt19937_64 rng(29);
    int done = 0;
    for (int trial = 0; trial < 24 && done < 12; ++trial) {
        GJM G = testutil::random_gjm(rng, 5);
        MomentSequence s = gjm_moments(G, 2 * G.dim());
        GJM back = schur_pfraction(s, 5).first;
        REQUIRE(back.depth() == 5);
        for (int j = 0; j < 5; ++j) {
            CHECK(back.block(j).k == G.block(j).k);
            CHECK(back.block(j).eps == G.block(j).eps);
            CHECK(back.block(j).p0 == G.block(j).p0);
            if (G.block(j).k == 2) CHECK(*back.block(j).p1 == *G.block(j).p1);
            if (j < 4) {
                REQUIRE(back.block(j).c.has_value());
                CHECK(*back.block(j).c == *G.block(j).c);
            }
        }
        ++done;
    }
    CHECK(done == 12);
}

TEST_CASE("poles of the m-function are the truncation eigenvalues") {
    auto check_duality = [](const GJM& G, int j) {
        RationalFn m = m_function(G, j);
        auto ps = poles(m);
        auto ev = dense_eigenvalues(G.truncation(0, j));
        REQUIRE(ps.size() == ev.size());
        auto key = [](const std::complex<double>& z) {
            return std::make_pair(z.real(), z.imag());
        };
        std::sort(ps.begin(), ps.end(),
                  [&](auto a, auto b) { return key(a) < key(b); });
        std::sort(ev.begin(), ev.end(),
                  [&](auto a, auto b) { return key(a) < key(b); });
        for (size_t i = 0; i < ps.size(); ++i)
            CHECK(std::abs(ps[i] - ev[i]) < 1e-8);
    };
    check_duality(christoffel(MonicJacobi::chebyshev_u(30), 12), 10);
    check_duality(christoffel(MonicJacobi::two_periodic(30), 12), 10);
}

TEST_CASE("m-function denominators are the truncation charpolys") {
    std::mt19937_64 rng(61);
    GJM G = testutil::random_gjm(rng, 5);
    for (int j = 1; j <= 5; ++j)
        CHECK(m_function(G, j).den == charpoly_oracle(G, j).first);
}

TEST_CASE("float-backend Schur construction approximates the exact one") {
    MeasureSpec m;
    m.named = MeasureSpec::Named::ChebyshevU;
    MomentSequence s = moments_from_measure(m, 14);
    auto [fg, frec] = schur_pfraction(s.to_float(), 3);
    auto [eg, erec] = schur_pfraction(s, 3);
    REQUIRE(fg.depth() == eg.depth());
    for (int j = 0; j < 3; ++j) {
        CHECK(fg.block(j).k == eg.block(j).k);
        CHECK(fg.block(j).p0.to_double() ==
              doctest::Approx(eg.block(j).p0.to_double()).epsilon(1e-12));
        if (eg.block(j).c)
            CHECK(fg.block(j).c->to_double() ==
                  doctest::Approx(eg.block(j).c->to_double()).epsilon(1e-12));
    }
}
