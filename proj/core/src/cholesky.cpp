#include "darboux/cholesky.hpp"

#include "darboux/errors.hpp"
#include "darboux/factorization.hpp"

namespace darboux {

ScalarMatrix SymJacobi::truncation(int n) const {
    if (n < 0 || n > rows())
        throw InsufficientDepth("symmetric truncation of size " +
                                std::to_string(n));
    ScalarMatrix m(n, n, backend());
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = diag[i];
        if (i + 1 < n) {
            m.at(i, i + 1) = offdiag[i];
            m.at(i + 1, i) = offdiag[i];
        }
    }
    return m;
}

MonicJacobi SymJacobi::monic() const {
    std::vector<Scalar> c;
    c.reserve(offdiag.size());
    for (const auto& e : offdiag) c.push_back(e * e);
    return MonicJacobi(diag, std::move(c));
}

int CholeskyFactors::dim() const {
    int n = 0;
    for (int k : kseq) n += k;
    return n;
}

ScalarMatrix CholeskyFactors::lower_dense() const {
    const Backend bk = lambdas.front().l0.backend();
    std::vector<int> ns{0};
    for (int k : kseq) ns.push_back(ns.back() + k);
    ScalarMatrix m = ScalarMatrix::identity(dim(), bk);
    for (size_t j = 0; j < lhat.size(); ++j) m.at(ns[j + 1], ns[j]) = lhat[j];
    return m;
}

ScalarMatrix CholeskyFactors::lambda_dense() const {
    const Backend bk = lambdas.front().l0.backend();
    std::vector<int> ns{0};
    for (int k : kseq) ns.push_back(ns.back() + k);
    ScalarMatrix m(dim(), dim(), bk);
    for (int j = 0; j < depth(); ++j) {
        const Lambda& lam = lambdas[j];
        int o = ns[j];
        if (kseq[j] == 1) {
            m.at(o, o) = lam.l0;
        } else {
            m.at(o, o + 1) = lam.l0;
            m.at(o + 1, o) = lam.l0;
            m.at(o + 1, o + 1) = *lam.l1;
        }
    }
    return m;
}

std::pair<SymJacobi, std::vector<Scalar>> symmetrize(const MonicJacobi& J) {
    for (int j = 0; j + 1 < J.rows(); ++j)
        if (J.c(j).sign() <= 0)
            throw NonPositiveC("c_" + std::to_string(j) + " not positive", j);
    bool all_square = true;
    if (J.backend() == Backend::Exact)
        for (int j = 0; j + 1 < J.rows(); ++j)
            all_square = all_square && J.c(j).is_perfect_square();
    else
        all_square = false;

    const MonicJacobi src =
        (J.backend() == Backend::Exact && !all_square) ? J.to_float() : J;
    const Backend bk = src.backend();
    SymJacobi js;
    js.diag = src.b();
    std::vector<Scalar> psi{Scalar::one(bk)};
    for (int j = 0; j + 1 < src.rows(); ++j) {
        Scalar root = *src.c(j).sqrt();
        js.offdiag.push_back(root);
        psi.push_back(psi.back() * root);
    }
    return {std::move(js), std::move(psi)};
}

CholeskyFactors generalized_cholesky(const SymJacobi& Js, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const Backend bk = Js.backend();
    const MonicJacobi J = Js.monic();
    const BlockFactors lu = lu_jacobi(J, depth);
    const auto ns = lu.nseq();

    CholeskyFactors ch;
    ch.kseq = lu.kseq();
    for (int j = 0; j < depth; ++j) {
        const FactorEntry& e = lu.entry(j);
        CholeskyFactors::Lambda lam;
        if (e.k == 1) {
            // conjugation by a scalar leaves a 1x1 block alone
            lam.l0 = e.u0;
        } else {
            // Psi_j^{-1} U_j Psi_j = [[0, sqrt(c_n)], [u0/sqrt(c_n), u1]] and
            // u0 = c_n makes it symmetric.
            lam.l0 = Js.offdiag[ns[j]];
            lam.l1 = *e.u1;
        }
        ch.lambdas.push_back(std::move(lam));
        if (j + 1 < depth) {
            // \hat l = l * psi_{n_j} / psi_{n_{j+1}}
            Scalar ratio = Scalar::one(bk);
            for (int i = ns[j]; i < ns[j + 1]; ++i) ratio *= Js.offdiag[i];
            ch.lhat.push_back(*e.l / ratio);
        }
    }
    return ch;
}

}  // namespace darboux
