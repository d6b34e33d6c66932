#include "darboux/moments.hpp"

#include <cmath>

#include "darboux/errors.hpp"
#include "darboux/matrix.hpp"

namespace darboux {

MomentSequence MomentSequence::to_float() const {
    std::vector<Scalar> t;
    t.reserve(s.size());
    for (const auto& x : s) t.push_back(x.to_float());
    std::optional<Scalar> sm1;
    if (s_minus1) sm1 = s_minus1->to_float();
    return MomentSequence(std::move(t), std::move(sm1));
}

Series MomentSequence::function_series() const {
    std::vector<Scalar> c;
    c.reserve(s.size());
    for (const auto& x : s) c.push_back(-x);
    return Series(std::move(c));
}

namespace {

ScalarMatrix hankel_block(const MomentSequence& s, int n, int shift = 0) {
    ScalarMatrix m(n, n, s.backend());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.at(i, k) = s.at(i + k + shift);
    return m;
}

}  // namespace

Scalar hankel_det(const MomentSequence& s, int n) {
    if (n < 0) throw std::invalid_argument("negative Hankel order");
    if (n == 0) return Scalar::one(s.size() ? s.backend() : Backend::Exact);
    if (s.size() < 2 * n - 1)
        throw InsufficientMoments("Hankel determinant of order " +
                                      std::to_string(n) + " needs " +
                                      std::to_string(2 * n - 1) + " moments, have " +
                                      std::to_string(s.size()),
                                  n);
    return hankel_block(s, n).det();
}

NormalIndexReport normal_indices(const MomentSequence& s, int nmax) {
    if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
    if (s.size() < 2 * nmax - 1)
        throw InsufficientMoments("testing normal indices up to " +
                                      std::to_string(nmax) + " needs " +
                                      std::to_string(2 * nmax - 1) + " moments",
                                  nmax);
    NormalIndexReport rep;
    const bool exact = s.backend() == Backend::Exact;
    for (int n = 1; n <= nmax; ++n) {
        ScalarMatrix h = hankel_block(s, n);
        Scalar d = h.det();
        rep.hankel_dets.push_back(d);
        bool nonzero;
        if (exact) {
            nonzero = d.sign() != 0;
        } else {
            double mag = std::abs(d.to_double());
            double scale = h.hadamard_bound();
            if (mag != 0.0 && mag <= config::tau_zero() * std::max(1.0, scale))
                throw FloatAmbiguous("Hankel determinant of order " +
                                         std::to_string(n) +
                                         " is within tolerance of zero: " + d.str(),
                                     n);
            nonzero = mag != 0.0;
        }
        if (nonzero) rep.indices.push_back(n);
    }
    int prev = 0;
    for (int n : rep.indices) {
        rep.gaps.push_back(n - prev);
        if (n - prev > 2) rep.gap_exceeds_two = true;
        prev = n;
    }
    return rep;
}

namespace {

// Catalan(n) / 4^n and binom(2n, n) / 4^n, exact.
Scalar chebyshev_u_even_moment(int n) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    mpz_class pow4 = 1;
    mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), 2 * n);
    return Scalar::exact(mpq_class(binom, pow4 * (n + 1)));
}

Scalar arcsine_even_moment(int n) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    mpz_class pow4 = 1;
    mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), 2 * n);
    return Scalar::exact(mpq_class(binom, pow4));
}

}  // namespace

MomentSequence moments_from_measure(const MeasureSpec& m, int count) {
    if (count < 1) throw std::invalid_argument("moment count must be >= 1");
    Backend bk = Backend::Exact;
    for (const auto& atom : m.atoms) {
        if (atom.a.sign() <= 0)
            throw std::invalid_argument("atom weights must be positive");
        bk = atom.t.backend();
    }
    std::vector<Scalar> s(count, Scalar::zero(bk));
    if (m.named == MeasureSpec::Named::ChebyshevU ||
        m.named == MeasureSpec::Named::Arcsine) {
        if (bk != Backend::Exact)
            throw std::logic_error("named measures are exact-backend only");
        for (int k = 0; k < count; k += 2)
            s[k] = m.named == MeasureSpec::Named::ChebyshevU
                       ? chebyshev_u_even_moment(k / 2)
                       : arcsine_even_moment(k / 2);
    }
    // Power sums of the atoms, accumulated on top of the named part.
    std::vector<Scalar> tpow(m.atoms.size(), Scalar::one(bk));
    for (int k = 0; k < count; ++k) {
        for (size_t i = 0; i < m.atoms.size(); ++i) {
            s[k] += m.atoms[i].a * tpow[i];
            tpow[i] *= m.atoms[i].t;
        }
    }
    return MomentSequence(std::move(s));
}

MomentSequence moments_from_jacobi(const MonicJacobi& J, int count) {
    if (count < 1) throw std::invalid_argument("moment count must be >= 1");
    // Entries of J^k e_0 never spread past index k/2 and back, so
    // ceil(count/2)+1 rows make the result independent of the truncation.
    // A shorter matrix is taken as the entire (finite) operator.
    const int needed = std::min((count - 1) / 2 + 1, J.rows());
    const Backend bk = J.backend();
    std::vector<Scalar> v(needed, Scalar::zero(bk));
    v[0] = Scalar::one(bk);
    std::vector<Scalar> s;
    s.reserve(count);
    for (int k = 0; k < count; ++k) {
        s.push_back(v[0]);
        std::vector<Scalar> w(needed, Scalar::zero(bk));
        for (int i = 0; i < needed; ++i) {
            Scalar acc = J.b(i) * v[i];
            if (i > 0) acc += J.c(i - 1) * v[i - 1];
            if (i + 1 < needed) acc += v[i + 1];
            w[i] = acc;
        }
        v = std::move(w);
    }
    return MomentSequence(std::move(s));
}

MomentSequence shift_for_christoffel(const MomentSequence& s) {
    if (s.size() < 2)
        throw InsufficientMoments("cannot shift a sequence of length " +
                                  std::to_string(s.size()));
    std::vector<Scalar> t(s.s.begin() + 1, s.s.end());
    return MomentSequence(std::move(t));
}

MomentSequence unshift(const MomentSequence& s, const Scalar& s_minus1) {
    std::vector<Scalar> t;
    t.reserve(s.s.size() + 1);
    t.push_back(s_minus1);
    t.insert(t.end(), s.s.begin(), s.s.end());
    return MomentSequence(std::move(t));
}

}  // namespace darboux
