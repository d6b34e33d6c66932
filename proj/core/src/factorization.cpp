#include "darboux/factorization.hpp"

#include <stdexcept>

#include "darboux/errors.hpp"

namespace darboux {

BlockFactors::BlockFactors(FactorKind kind, std::vector<FactorEntry> entries,
                           std::optional<Scalar> param, int source_eps0)
    : kind_(kind), entries_(std::move(entries)), param_(std::move(param)),
      source_eps0_(source_eps0) {
    if (entries_.empty())
        throw std::invalid_argument("factorization needs >= 1 block");
    if (source_eps0_ != 1 && source_eps0_ != -1)
        throw ShapeMismatch("source eps_0 must be +1 or -1");
    const bool p31 = kind_ == FactorKind::LUJacobi || kind_ == FactorKind::ULGjm;
    for (size_t j = 0; j < entries_.size(); ++j) {
        const FactorEntry& e = entries_[j];
        if (e.k != 1 && e.k != 2) throw ShapeMismatch("factor block size", j);
        if (p31 && (e.k == 2) != e.u1.has_value())
            throw ShapeMismatch("u1 must be present exactly when k = 2", j);
        if (!p31 && (e.k == 2) != e.e.has_value())
            throw ShapeMismatch("e must be present exactly when k = 2", j);
        if ((j + 1 < entries_.size()) != e.l.has_value())
            throw ShapeMismatch("l must be present exactly on interior blocks", j);
    }
}

std::vector<int> BlockFactors::kseq() const {
    std::vector<int> k;
    k.reserve(entries_.size());
    for (const auto& e : entries_) k.push_back(e.k);
    return k;
}

std::vector<int> BlockFactors::nseq() const {
    std::vector<int> n{0};
    for (const auto& e : entries_) n.push_back(n.back() + e.k);
    return n;
}

int BlockFactors::dim() const { return nseq().back(); }

ScalarMatrix BlockFactors::lower_dense() const {
    const Backend bk = backend();
    const auto ns = nseq();
    ScalarMatrix m = ScalarMatrix::identity(dim(), bk);
    const bool p31 = kind_ == FactorKind::LUJacobi || kind_ == FactorKind::ULGjm;
    for (int j = 0; j + 1 < depth(); ++j) {
        const Scalar& l = *entries_[j].l;
        if (p31) {
            // L_{j+1} carries l in its top-left corner.
            m.at(ns[j + 1], ns[j]) = l;
        } else {
            // bottom-right corner of the subdiagonal block
            m.at(ns[j + 2] - 1, ns[j + 1] - 1) = l;
        }
    }
    if (!p31) {
        for (int j = 0; j < depth(); ++j)
            if (entries_[j].k == 2) m.at(ns[j] + 1, ns[j]) = *entries_[j].e;
    }
    return m;
}

ScalarMatrix BlockFactors::upper_dense() const {
    const Backend bk = backend();
    const auto ns = nseq();
    ScalarMatrix m(dim(), dim(), bk);
    const bool p31 = kind_ == FactorKind::LUJacobi || kind_ == FactorKind::ULGjm;
    for (int j = 0; j < depth(); ++j) {
        const FactorEntry& e = entries_[j];
        if (e.k == 1) {
            m.at(ns[j], ns[j]) = e.u0;
        } else {
            m.at(ns[j], ns[j] + 1) = Scalar::one(bk);
            m.at(ns[j] + 1, ns[j]) = e.u0;
            if (p31) m.at(ns[j] + 1, ns[j] + 1) = *e.u1;
        }
        if (j + 1 < depth())
            m.at(ns[j] + e.k - 1, ns[j + 1]) = Scalar::one(bk);  // D_j
    }
    return m;
}

namespace {

bool scalar_is_zero(const Scalar& x, double scale) {
    return x.backend() == Backend::Exact ? x.sign() == 0 : x.is_zero(scale);
}

// --- lu_jacobi -------------------------------------------------------------

// Normal indices of the shifted moment sequence, read off the zeros of
// P_n(0): n is normal iff P_n(0) != 0. Returns n_0 = 0 .. n_depth.
std::vector<int> lu_normal_indices(const MonicJacobi& J, int depth) {
    const Backend bk = J.backend();
    std::vector<Scalar> pv{Scalar::one(bk)};  // P_0(0)
    std::vector<int> ns{0};
    double scale = 1.0;
    int n = 0;
    while (static_cast<int>(ns.size()) < depth + 1) {
        if (n >= J.rows())
            throw InsufficientDepth(
                "jacobi matrix too short for " + std::to_string(depth) +
                    " factor blocks (stalled at row " + std::to_string(n) + ")",
                n);
        Scalar next = -J.b(n) * pv[n];
        if (n > 0) next -= J.c(n - 1) * pv[n - 1];
        pv.push_back(next);
        ++n;
        if (!scalar_is_zero(next, scale)) {
            ns.push_back(n);
            scale = std::max(scale, std::abs(next.to_double()));
        } else if (n - ns.back() >= 2) {
            throw ZeroDenominator(
                "P_n(0) vanishes at two consecutive indices near n = " +
                    std::to_string(n),
                n);
        }
    }
    return ns;
}

}  // namespace

BlockFactors lu_jacobi(const MonicJacobi& J, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const Backend bk = J.backend();
    const std::vector<int> ns = lu_normal_indices(J, depth);
    const double jscale = J.truncation(std::min(J.rows(), ns[depth])).max_abs();

    std::vector<FactorEntry> es(depth);
    for (int j = 0; j < depth; ++j) {
        const int kj = ns[j + 1] - ns[j];
        const int nj = ns[j];
        es[j].k = kj;
        Scalar corr = Scalar::zero(bk);  // (L_j D_{j-1})(0,0), nonzero iff k_{j-1}=1
        if (j > 0) {
            const int kprev = ns[j] - ns[j - 1];
            Scalar l;
            if (kprev == 1) {
                if (scalar_is_zero(es[j - 1].u0, jscale))
                    throw ZeroDenominator("u_0^{(" + std::to_string(j - 1) +
                                              ")} vanishes",
                                          j - 1);
                l = J.c(nj - 1) / es[j - 1].u0;
                corr = l;
            } else {
                l = J.c(nj - 1);
            }
            es[j - 1].l = l;
        }
        if (kj == 1) {
            es[j].u0 = J.b(nj) - corr;
        } else {
            Scalar top = J.b(nj) - corr;
            if (!scalar_is_zero(top, jscale))
                throw ShapeMismatch("2x2 block at " + std::to_string(j) +
                                        " is not in companion form",
                                    j);
            es[j].u0 = J.c(nj);
            es[j].u1 = J.b(nj + 1);
        }
    }
    return BlockFactors(FactorKind::LUJacobi, std::move(es));
}

// --- ul_jacobi -------------------------------------------------------------

namespace {

// Normal indices of the prepended sequence, read off the zeros of
// (Q - s_{-1} P)(0): n is normal iff that value at index n-1 is nonzero.
std::vector<int> ul_normal_indices(const MonicJacobi& J, const Scalar& sm1,
                                   int depth) {
    const Backend bk = J.backend();
    Scalar p_prev = Scalar::zero(bk), p_cur = Scalar::one(bk);   // P_{-1}, P_0
    Scalar q_prev = -Scalar::one(bk), q_cur = Scalar::zero(bk);  // Q_{-1}, Q_0
    std::vector<int> ns{0};
    double scale = std::max(1.0, std::abs(sm1.to_double()));
    int idx = 0;  // index of (p_cur, q_cur)
    while (static_cast<int>(ns.size()) < depth + 1) {
        Scalar phat = q_cur - sm1 * p_cur;
        if (!scalar_is_zero(phat, scale)) {
            ns.push_back(idx + 1);
            scale = std::max(scale, std::abs(phat.to_double()));
        } else if (idx + 1 - ns.back() >= 2) {
            throw ZeroDenominator(
                "(Q - s_{-1}P)(0) vanishes at two consecutive indices near " +
                    std::to_string(idx),
                idx);
        }
        if (static_cast<int>(ns.size()) == depth + 1) break;
        if (idx >= J.rows())
            throw InsufficientDepth("jacobi matrix too short for " +
                                        std::to_string(depth) + " UL blocks",
                                    idx);
        Scalar c = idx == 0 ? Scalar::one(bk) : J.c(idx - 1);
        Scalar p_next = -J.b(idx) * p_cur - c * p_prev;
        Scalar q_next = -J.b(idx) * q_cur - c * q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
        ++idx;
    }
    return ns;
}

}  // namespace

BlockFactors ul_jacobi(const MonicJacobi& J, const Scalar& s_minus1, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const Backend bk = J.backend();
    if (s_minus1.backend() != bk)
        throw std::logic_error("parameter backend mismatch");
    const std::vector<int> ns = ul_normal_indices(J, s_minus1, depth);
    if (ns[depth] > J.rows())
        throw InsufficientDepth("jacobi matrix too short for " +
                                    std::to_string(depth) + " UL blocks",
                                depth);
    const double jscale =
        std::max(1.0, J.truncation(std::min(J.rows(), ns[depth])).max_abs());

    std::vector<FactorEntry> es(depth);
    // Seed block 0. k_0 = 1 happens exactly when s_{-1} != 0 and uses the
    // free-parameter convention u_0 = -1/s_{-1}; k_0 = 2 is fully determined.
    if (ns[1] - ns[0] == 1) {
        es[0].k = 1;
        es[0].u0 = -Scalar::one(bk) / s_minus1;
    } else {
        es[0].k = 2;
        es[0].e = J.b(0);
        es[0].u0 = J.c(0);
    }
    for (int j = 0; j < depth - 1; ++j) {
        const int kj = ns[j + 1] - ns[j];
        const int kn = ns[j + 2] - ns[j + 1];
        const int njn = ns[j + 1];
        Scalar l;
        if (kn == 1) {
            // from the diagonal equation of block j
            l = kj == 1 ? J.b(ns[j]) - es[j].u0 : J.b(ns[j] + 1);
        } else {
            // from the subdiagonal equation; the diagonal equation of block j
            // degenerates to a consistency constraint checked below
            l = J.c(njn - 1);
            Scalar constraint =
                kj == 1 ? J.b(ns[j]) - es[j].u0 : J.b(ns[j] + 1);
            if (!scalar_is_zero(constraint, jscale))
                throw ShapeMismatch("UL block equations inconsistent at block " +
                                        std::to_string(j),
                                    j);
        }
        es[j].l = l;
        es[j + 1].k = kn;
        if (kn == 1) {
            if (scalar_is_zero(l, jscale))
                throw ZeroDenominator("l_" + std::to_string(j + 1) +
                                          " vanishes in the UL factorization",
                                      j + 1);
            es[j + 1].u0 = J.c(njn - 1) / l;
        } else {
            es[j + 1].e = J.b(njn);
            es[j + 1].u0 = J.c(njn);
        }
    }
    return BlockFactors(FactorKind::ULJacobi, std::move(es), s_minus1);
}

// --- factorizations of generalized Jacobi matrices --------------------------

BlockFactors ul_gjm(const GJM& G, const Scalar& s_minus1, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (depth > G.depth())
        throw InsufficientDepth("GJM has " + std::to_string(G.depth()) +
                                    " blocks, need " + std::to_string(depth),
                                depth);
    const Backend bk = G.backend();
    if (s_minus1.backend() != bk)
        throw std::logic_error("parameter backend mismatch");
    if (scalar_is_zero(s_minus1, 1.0))
        throw ZeroParameter("the UL factorization of a GJM needs s_{-1} != 0");
    const double gscale = std::max(1.0, G.truncation(0, depth).max_abs());

    std::vector<FactorEntry> es(depth);
    es[0].k = G.block(0).k;
    // The seed carries the sign of eps_0: the reassembled Jacobi moments pick
    // up a factor eps_0 u_0^{(0)}, which must be positive for the product to
    // be the matrix of (F - s_{-1})/lambda.
    es[0].u0 = Scalar::from_int(G.block(0).eps, bk) / s_minus1;
    if (es[0].k == 2) es[0].u1 = -*G.block(0).p1;
    for (int j = 0; j < depth - 1; ++j) {
        Scalar l = -G.block(j).p0 - es[j].u0;
        if (scalar_is_zero(l, gscale))
            throw ZeroDenominator("l_" + std::to_string(j + 1) +
                                      " vanishes in the GJM UL factorization",
                                  j + 1);
        es[j].l = l;
        es[j + 1].k = G.block(j + 1).k;
        es[j + 1].u0 = G.coupling(j) / l;
        if (es[j + 1].k == 2) es[j + 1].u1 = -*G.block(j + 1).p1;
    }
    return BlockFactors(FactorKind::ULGjm, std::move(es), s_minus1,
                        G.block(0).eps);
}

BlockFactors lu_gjm(const GJM& G, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (depth > G.depth())
        throw InsufficientDepth("GJM has " + std::to_string(G.depth()) +
                                    " blocks, need " + std::to_string(depth),
                                depth);
    const Backend bk = G.backend();
    const double gscale = std::max(1.0, G.truncation(0, depth).max_abs());

    std::vector<FactorEntry> es(depth);
    Scalar l_in = Scalar::zero(bk);
    for (int j = 0; j < depth; ++j) {
        es[j].k = G.block(j).k;
        es[j].u0 = -G.block(j).p0 - l_in;
        if (es[j].k == 2) es[j].e = -*G.block(j).p1;
        if (j + 1 < depth) {
            if (scalar_is_zero(es[j].u0, gscale))
                throw ZeroDenominator(
                    "u_" + std::to_string(j) +
                        " vanishes: the GJM is not in the D+ class at this depth",
                    j);
            Scalar l = G.coupling(j) / es[j].u0;
            es[j].l = l;
            l_in = l;
        }
    }
    return BlockFactors(FactorKind::LUGjm, std::move(es), std::nullopt,
                        G.block(0).eps);
}

// --- block products ---------------------------------------------------------

namespace {

MonicJacobi jacobi_from_dense(const ScalarMatrix& m, int valid_rows) {
    const double scale = std::max(1.0, m.max_abs());
    std::vector<Scalar> b, c;
    for (int i = 0; i < valid_rows; ++i) {
        for (int j = 0; j < valid_rows; ++j) {
            if (std::abs(i - j) <= 1) continue;
            if (!scalar_is_zero(m.at(i, j), scale))
                throw ShapeMismatch("product is not tridiagonal at (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ")");
        }
        b.push_back(m.at(i, i));
        if (i + 1 < valid_rows) {
            Scalar sup = m.at(i, i + 1) - Scalar::one(m.backend());
            if (!scalar_is_zero(sup, scale))
                throw ShapeMismatch("superdiagonal entry " + std::to_string(i) +
                                    " is not 1");
            if (m.at(i + 1, i).sign() <= 0)
                throw ShapeMismatch(
                    "subdiagonal entry " + std::to_string(i) +
                    " is not positive; the product is not a monic Jacobi matrix");
            c.push_back(m.at(i + 1, i));
        }
    }
    return MonicJacobi(std::move(b), std::move(c));
}

// Extracts `nblocks` GJM blocks (with couplings c_0..c_{ncouplings-1}) from a
// dense product, verifying the companion/coupling block pattern along the
// way. The dense matrix covers at least max(nblocks, ncouplings + 1) factor
// blocks.
GJM gjm_from_dense(const ScalarMatrix& m, const std::vector<int>& kseq,
                   int nblocks, int ncouplings, int eps0) {
    const Backend bk = m.backend();
    const double scale = std::max(1.0, m.max_abs());
    std::vector<int> ns{0};
    for (int k : kseq) ns.push_back(ns.back() + k);
    auto expect_zero = [&](int i, int j) {
        if (!scalar_is_zero(m.at(i, j), scale))
            throw ShapeMismatch("unexpected nonzero product entry at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    };
    std::vector<GJMBlock> blocks(nblocks);
    for (int j = 0; j < nblocks; ++j) {
        const int o = ns[j], k = kseq[j];
        blocks[j].k = k;
        if (k == 1) {
            blocks[j].p0 = -m.at(o, o);
        } else {
            expect_zero(o, o);
            Scalar one_entry = m.at(o, o + 1) - Scalar::one(bk);
            if (!scalar_is_zero(one_entry, scale))
                throw ShapeMismatch("companion block " + std::to_string(j) +
                                    " top-right entry is not 1");
            blocks[j].p0 = -m.at(o + 1, o);
            blocks[j].p1 = -m.at(o + 1, o + 1);
        }
    }
    for (int j = 0; j < ncouplings; ++j) {
        const int o = ns[j], k = kseq[j];
        const int o2 = ns[j + 1], k2 = kseq[j + 1];
        // D_j: 1 in the bottom-left corner, zero elsewhere.
        Scalar d_entry = m.at(o + k - 1, o2) - Scalar::one(bk);
        if (!scalar_is_zero(d_entry, scale))
            throw ShapeMismatch("superdiagonal block " + std::to_string(j) +
                                " is not of unit type");
        for (int r = 0; r < k; ++r)
            for (int cc = 0; cc < k2; ++cc)
                if (!(r == k - 1 && cc == 0)) expect_zero(o + r, o2 + cc);
        // C_j: c_j in the bottom-left corner, zero elsewhere.
        Scalar c = m.at(o2 + k2 - 1, o);
        if (scalar_is_zero(c, scale))
            throw ShapeMismatch("zero coupling in product at block " +
                                std::to_string(j));
        for (int r = 0; r < k2; ++r)
            for (int cc = 0; cc < k; ++cc)
                if (!(r == k2 - 1 && cc == 0)) expect_zero(o2 + r, o + cc);
        blocks[j].c = c;
    }
    // Everything two or more blocks off the diagonal must vanish.
    for (int i = 0; i < nblocks; ++i)
        for (int j = 0; j < nblocks; ++j) {
            if (std::abs(i - j) <= 1) continue;
            for (int r = ns[i]; r < ns[i + 1]; ++r)
                for (int cc = ns[j]; cc < ns[j + 1]; ++cc) expect_zero(r, cc);
        }
    // The sign sequence follows from eps_0 and the coupling signs.
    int eps = eps0;
    for (int j = 0; j < nblocks; ++j) {
        blocks[j].eps = eps;
        if (j < ncouplings) eps = eps * blocks[j].c->sign();
    }
    return GJM(std::move(blocks));
}

}  // namespace

ProductResult block_product(const BlockFactors& f, ProductOrder order) {
    const ScalarMatrix L = f.lower_dense();
    const ScalarMatrix U = f.upper_dense();
    const int d = f.depth();
    const auto ns = f.nseq();
    const auto ks = f.kseq();

    // Which concrete product realizes the requested order for this kind, and
    // what the result is.
    bool lu_first;  // the factored form is L*U (else U*L)
    switch (f.kind()) {
        case FactorKind::LUJacobi: lu_first = true; break;
        case FactorKind::ULJacobi: lu_first = false; break;
        case FactorKind::ULGjm:    lu_first = false; break;
        case FactorKind::LUGjm:    lu_first = true; break;
        default: throw std::logic_error("unknown factor kind");
    }
    const bool take_lu = (order == ProductOrder::AsFactored) == lu_first;
    const ScalarMatrix P = take_lu ? L * U : U * L;

    const bool source_jacobi = f.kind() == FactorKind::LUJacobi ||
                               f.kind() == FactorKind::ULJacobi;
    const bool result_jacobi =
        (order == ProductOrder::AsFactored) == source_jacobi;

    if (result_jacobi) {
        int valid_rows;
        if (f.kind() == FactorKind::LUJacobi || f.kind() == FactorKind::ULGjm)
            valid_rows = ns[d];  // L*U is complete on all stored blocks
        else
            valid_rows = ns[d - 1];  // U*L lacks the trailing L block
        return jacobi_from_dense(P, valid_rows);
    }

    int nblocks, ncouplings;
    if (take_lu) {
        // L*U (P41 family as factored, P31 family swapped): all d diagonal
        // blocks are complete, the coupling after block d-1 is not.
        nblocks = d;
        ncouplings = d - 1;
    } else {
        // U*L: the diagonal block d-1 needs the missing L_d.
        nblocks = d - 1;
        ncouplings = d - 1;
        if (nblocks < 1)
            throw InsufficientDepth("need >= 2 factor blocks for this product");
    }
    int eps0;
    if (source_jacobi) {
        int s = f.entry(0).u0.sign();
        if (s == 0)
            throw ZeroDenominator("leading factor entry vanishes; cannot "
                                  "orient the sign sequence");
        eps0 = s;
    } else {
        eps0 = f.source_eps0();
    }
    return gjm_from_dense(P, ks, nblocks, ncouplings, eps0);
}

GJM gjm_square_product(const BlockFactors& f) {
    if (f.kind() != FactorKind::LUJacobi && f.kind() != FactorKind::ULJacobi)
        throw ShapeMismatch("square product is defined for Jacobi-side factors");
    const ScalarMatrix L = f.lower_dense();
    const ScalarMatrix U = f.upper_dense();
    const ScalarMatrix P =
        f.kind() == FactorKind::LUJacobi ? U * L : L * U;
    int s = f.entry(0).u0.sign();
    if (s == 0)
        throw ZeroDenominator(
            "leading factor entry vanishes; cannot orient the sign sequence");
    return gjm_from_dense(P, f.kseq(), f.depth(), f.depth() - 1, s);
}

GJM christoffel(const MonicJacobi& J, int depth, Scalar* scale_out) {
    BlockFactors f = lu_jacobi(J, depth + 1);
    if (scale_out) *scale_out = f.entry(0).u0.abs();
    return std::get<GJM>(block_product(f, ProductOrder::Swapped));
}

MonicJacobi inverse_christoffel(const GJM& G, const Scalar& s_minus1,
                                int depth) {
    BlockFactors f = ul_gjm(G, s_minus1, depth);
    return std::get<MonicJacobi>(block_product(f, ProductOrder::Swapped));
}

GJM geronimus(const MonicJacobi& J, const Scalar& s_minus1, int depth) {
    BlockFactors f = ul_jacobi(J, s_minus1, depth + 1);
    GJM g = std::get<GJM>(block_product(f, ProductOrder::Swapped));
    return g.prefix(depth);
}

MonicJacobi inverse_geronimus(const GJM& G, int depth) {
    BlockFactors f = lu_gjm(G, depth);
    return std::get<MonicJacobi>(block_product(f, ProductOrder::Swapped));
}

}  // namespace darboux
