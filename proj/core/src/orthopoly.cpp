#include "darboux/orthopoly.hpp"

#include "darboux/errors.hpp"
#include "darboux/matrix.hpp"

namespace darboux {

PolyPair classical_polys(const MonicJacobi& J, int m) {
    if (m < 0) throw std::invalid_argument("negative index");
    if (J.rows() < m)
        throw InsufficientDepth("classical polynomials to index " +
                                    std::to_string(m) + " need " +
                                    std::to_string(m) + " rows, have " +
                                    std::to_string(J.rows()),
                                m);
    const Backend bk = J.backend();
    PolyPair pp;
    Poly Pm1 = Poly::zero(bk), P0 = Poly::constant(Scalar::one(bk));
    Poly Qm1 = Poly::constant(-Scalar::one(bk)), Q0 = Poly::zero(bk);
    pp.P.push_back(P0);
    pp.Q.push_back(Q0);
    for (int j = 0; j < m; ++j) {
        Poly x_minus_b = Poly::linear(-J.b(j), Scalar::one(bk));
        Scalar cj = j == 0 ? Scalar::one(bk) : J.c(j - 1);
        Poly P1 = x_minus_b * P0 - Pm1.scaled(cj);
        Poly Q1 = x_minus_b * Q0 - Qm1.scaled(cj);
        Pm1 = std::move(P0);
        P0 = std::move(P1);
        Qm1 = std::move(Q0);
        Q0 = std::move(Q1);
        pp.P.push_back(P0);
        pp.Q.push_back(Q0);
    }
    return pp;
}

GJMPolyPair gjm_polys(const GJM& G, int m) {
    if (m < 0) throw std::invalid_argument("negative index");
    if (G.depth() < m)
        throw InsufficientDepth("GJM polynomials to index " + std::to_string(m) +
                                    " need " + std::to_string(m) + " blocks",
                                m);
    const Backend bk = G.backend();
    GJMPolyPair pp;
    pp.eps0 = G.depth() > 0 ? G.block(0).eps : 1;
    Poly Pm1 = Poly::zero(bk), P0 = Poly::constant(Scalar::one(bk));
    Poly Qm1 = Poly::constant(-Scalar::one(bk)), Q0 = Poly::zero(bk);
    pp.P.push_back(P0);
    pp.Q.push_back(Q0);
    for (int j = 0; j < m; ++j) {
        Poly pj = G.pfrak(j);
        Scalar cj = j == 0 ? Scalar::from_int(pp.eps0, bk) : G.coupling(j - 1);
        Poly P1 = pj * P0 - Pm1.scaled(cj);
        Poly Q1 = pj * Q0 - Qm1.scaled(cj);
        Pm1 = std::move(P0);
        P0 = std::move(P1);
        Qm1 = std::move(Q0);
        Q0 = std::move(Q1);
        pp.P.push_back(P0);
        pp.Q.push_back(Q0);
    }
    return pp;
}

namespace {

ScalarMatrix hankel_block(const MomentSequence& s, int n, int shift) {
    ScalarMatrix m(n, n, s.backend());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.at(i, k) = s.at(i + k + shift);
    return m;
}

Scalar nonzero_hankel(const MomentSequence& s, int nj) {
    Scalar d = hankel_det(s, nj);
    bool zero = s.backend() == Backend::Exact
                    ? d.sign() == 0
                    : d.is_zero(hankel_block(s, nj, 0).hadamard_bound());
    if (zero)
        throw SingularHankel("Hankel determinant of order " + std::to_string(nj) +
                                 " vanishes",
                             nj);
    return d;
}

}  // namespace

Poly det_formula_P(const MomentSequence& s, int nj) {
    if (nj < 0) throw std::invalid_argument("negative degree");
    const Backend bk = s.size() ? s.backend() : Backend::Exact;
    if (nj == 0) return Poly::constant(Scalar::one(bk));
    if (s.size() < 2 * nj)
        throw InsufficientMoments("determinant formula of degree " +
                                      std::to_string(nj) + " needs " +
                                      std::to_string(2 * nj) + " moments",
                                  nj);
    Scalar d = nonzero_hankel(s, nj);
    // Cofactor expansion along the lambda row: coefficient of lambda^l is
    // (-1)^{nj+l} det of the moment rows with column l removed.
    std::vector<Scalar> coeffs(nj + 1, Scalar::zero(bk));
    for (int l = 0; l <= nj; ++l) {
        ScalarMatrix minor(nj, nj, bk);
        for (int i = 0; i < nj; ++i) {
            int cc = 0;
            for (int c = 0; c <= nj; ++c) {
                if (c == l) continue;
                minor.at(i, cc++) = s.at(i + c);
            }
        }
        Scalar sign = (nj + l) % 2 == 0 ? Scalar::one(bk) : -Scalar::one(bk);
        coeffs[l] = sign * minor.det() / d;
    }
    return Poly(std::move(coeffs));
}

Scalar det_formula_P0(const MomentSequence& s, int nj) {
    const Backend bk = s.size() ? s.backend() : Backend::Exact;
    if (nj == 0) return Scalar::one(bk);
    if (s.size() < 2 * nj)
        throw InsufficientMoments("P(0) formula of degree " + std::to_string(nj) +
                                      " needs " + std::to_string(2 * nj) +
                                      " moments",
                                  nj);
    Scalar d = nonzero_hankel(s, nj);
    Scalar shifted = hankel_block(s, nj, 1).det();
    Scalar sign = nj % 2 == 0 ? Scalar::one(bk) : -Scalar::one(bk);
    return sign * shifted / d;
}

Scalar bordered_Q0(const MomentSequence& s, int nj) {
    const Backend bk = s.size() ? s.backend() : Backend::Exact;
    if (nj == 0) return Scalar::zero(bk);
    if (s.size() < 2 * nj)
        throw InsufficientMoments("Q(0) formula of degree " + std::to_string(nj) +
                                      " needs " + std::to_string(2 * nj) +
                                      " moments",
                                  nj);
    Scalar d = nonzero_hankel(s, nj);
    ScalarMatrix m(nj + 1, nj + 1, bk);
    for (int l = 1; l <= nj; ++l) m.at(0, l) = s.at(l - 1);
    for (int i = 1; i <= nj; ++i) {
        m.at(i, 0) = s.at(i - 1);
        for (int l = 1; l <= nj; ++l) m.at(i, l) = s.at(i + l - 1);
    }
    Scalar sign = nj % 2 == 0 ? Scalar::one(bk) : -Scalar::one(bk);
    return sign * m.det() / d;
}

std::pair<Poly, Poly> charpoly_oracle(const GJM& G, int j) {
    if (j < 0 || j > G.depth())
        throw InsufficientDepth("characteristic polynomial oracle needs " +
                                    std::to_string(j) + " blocks",
                                j);
    const Backend bk = G.backend();
    if (j == 0) return {Poly::constant(Scalar::one(bk)), Poly::zero(bk)};
    Poly p = G.truncation(0, j).charpoly();
    Poly q = G.truncation(1, j).charpoly().scaled(
        Scalar::from_int(G.block(0).eps, bk));
    return {p, q};
}

std::pair<Poly, Poly> charpoly_oracle(const MonicJacobi& J, int j) {
    return charpoly_oracle(GJM::from_jacobi(J), j);
}

}  // namespace darboux
