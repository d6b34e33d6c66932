#include "darboux/gjm.hpp"

#include <stdexcept>

#include "darboux/errors.hpp"
#include "darboux/orthopoly.hpp"
#include "darboux/series.hpp"

namespace darboux {

Scalar GJMBlock::b2() const {
    if (!c) throw InsufficientDepth("block has no coupling");
    return c->abs();
}

GJM::GJM(std::vector<GJMBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("GJM needs >= 1 block");
    for (size_t j = 0; j < blocks_.size(); ++j) {
        const GJMBlock& b = blocks_[j];
        if (b.k != 1 && b.k != 2)
            throw ShapeMismatch("block degree k must be 1 or 2", j);
        if ((b.k == 2) != b.p1.has_value())
            throw ShapeMismatch("p1 must be present exactly when k = 2", j);
        if (b.eps != 1 && b.eps != -1)
            throw ShapeMismatch("eps must be +1 or -1", j);
        if (j + 1 < blocks_.size()) {
            if (!b.c)
                throw ShapeMismatch("interior block lacks its coupling", j);
            if (b.c->sign() == 0)
                throw ShapeMismatch("zero coupling", j);
            // c_j = eps_j eps_{j+1} b_j^2 with b_j^2 > 0 forces the sign chain.
            if (blocks_[j + 1].eps != b.eps * b.c->sign())
                throw ShapeMismatch("eps chain inconsistent with coupling sign",
                                    j + 1);
        } else if (b.c && b.c->sign() == 0) {
            throw ShapeMismatch("zero coupling", j);
        }
    }
}

Backend GJM::backend() const { return blocks_.front().p0.backend(); }

std::vector<int> GJM::kseq() const {
    std::vector<int> k;
    k.reserve(blocks_.size());
    for (const auto& b : blocks_) k.push_back(b.k);
    return k;
}

std::vector<int> GJM::nseq() const {
    std::vector<int> n{0};
    for (const auto& b : blocks_) n.push_back(n.back() + b.k);
    return n;
}

int GJM::dim() const { return nseq().back(); }

Poly GJM::pfrak(int j) const {
    const GJMBlock& b = blocks_.at(j);
    const Backend bk = backend();
    std::vector<Scalar> c;
    if (b.k == 1)
        c = {b.p0, Scalar::one(bk)};
    else
        c = {b.p0, *b.p1, Scalar::one(bk)};
    return Poly(std::move(c));
}

Scalar GJM::coupling(int j) const {
    const GJMBlock& b = blocks_.at(j);
    if (!b.c)
        throw InsufficientDepth("coupling c_" + std::to_string(j) +
                                    " is not determined",
                                j);
    return *b.c;
}

ScalarMatrix GJM::truncation(int first_block, int last_block) const {
    if (first_block < 0 || last_block > depth() || first_block > last_block)
        throw InsufficientDepth("GJM truncation blocks [" +
                                    std::to_string(first_block) + "," +
                                    std::to_string(last_block) + ") out of range",
                                last_block);
    const Backend bk = backend();
    std::vector<int> offset{0};
    for (int j = first_block; j < last_block; ++j)
        offset.push_back(offset.back() + blocks_[j].k);
    ScalarMatrix m(offset.back(), offset.back(), bk);
    for (int j = first_block; j < last_block; ++j) {
        const GJMBlock& blk = blocks_[j];
        int o = offset[j - first_block];
        if (blk.k == 1) {
            m.at(o, o) = -blk.p0;
        } else {
            m.at(o, o + 1) = Scalar::one(bk);
            m.at(o + 1, o) = -blk.p0;
            m.at(o + 1, o + 1) = -*blk.p1;
        }
        if (j + 1 < last_block) {
            int o2 = offset[j + 1 - first_block];
            int k2 = blocks_[j + 1].k;
            // D_j has its 1 in the bottom-left corner, C_j carries c_j there.
            m.at(o + blk.k - 1, o2) = Scalar::one(bk);
            m.at(o2 + k2 - 1, o) = coupling(j);
        }
    }
    return m;
}

GJM GJM::prefix(int nblocks) const {
    if (nblocks < 1 || nblocks > depth())
        throw InsufficientDepth("GJM prefix of " + std::to_string(nblocks) +
                                    " blocks from " + std::to_string(depth()),
                                nblocks);
    return GJM(std::vector<GJMBlock>(blocks_.begin(), blocks_.begin() + nblocks));
}

GJM GJM::from_jacobi(const MonicJacobi& J) {
    std::vector<GJMBlock> blocks;
    for (int j = 0; j < J.rows(); ++j) {
        GJMBlock b;
        b.k = 1;
        b.p0 = -J.b(j);
        b.eps = 1;
        if (j + 1 < J.rows()) b.c = J.c(j);
        blocks.push_back(std::move(b));
    }
    return GJM(std::move(blocks));
}

bool GJM::is_classical() const {
    for (const auto& b : blocks_)
        if (b.k != 1 || b.eps != 1) return false;
    return true;
}

MonicJacobi GJM::to_jacobi() const {
    if (!is_classical())
        throw ShapeMismatch("GJM is not a classical Jacobi matrix");
    std::vector<Scalar> b, c;
    for (int j = 0; j < depth(); ++j) {
        b.push_back(-blocks_[j].p0);
        if (j + 1 < depth()) c.push_back(coupling(j));
    }
    return MonicJacobi(std::move(b), std::move(c));
}

GJM GJM::to_float() const {
    std::vector<GJMBlock> blocks;
    for (const auto& b : blocks_) {
        GJMBlock f = b;
        f.p0 = b.p0.to_float();
        if (b.p1) f.p1 = b.p1->to_float();
        if (b.c) f.c = b.c->to_float();
        blocks.push_back(std::move(f));
    }
    return GJM(std::move(blocks));
}

bool GJM::operator==(const GJM& o) const {
    if (depth() != o.depth()) return false;
    for (int j = 0; j < depth(); ++j) {
        const GJMBlock &a = blocks_[j], &b = o.blocks_[j];
        if (a.k != b.k || a.eps != b.eps || a.p0 != b.p0) return false;
        if (a.p1.has_value() != b.p1.has_value()) return false;
        if (a.p1 && *a.p1 != *b.p1) return false;
        if (a.c.has_value() != b.c.has_value()) return false;
        if (a.c && *a.c != *b.c) return false;
    }
    return true;
}

std::pair<GJM, NormalizationRecord> schur_pfraction(const MomentSequence& s,
                                                    int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const Backend bk = s.size() ? s.backend() : Backend::Exact;
    Series f = s.function_series();

    int t0 = f.first_nonzero();
    if (t0 < 0)
        throw RationalTermination("all moments vanish within the given order", 0);
    if (t0 >= 2)
        throw GapExceedsTwo("first normal index is " + std::to_string(t0 + 1) +
                                "; the sequence is outside the D-class",
                            0);
    Scalar scale = f.coeff(t0).abs();
    NormalizationRecord rec{scale, scale == Scalar::one(bk)};
    f = f.scaled(Scalar::one(bk) / scale);

    std::vector<GJMBlock> blocks;
    for (int j = 0; j < depth; ++j) {
        int t = f.first_nonzero();
        if (t < 0) {
            if (f.order() == 0)
                throw InsufficientMoments("ran out of series coefficients at block " +
                                              std::to_string(j),
                                          j);
            throw RationalTermination(
                "the Schur remainder vanishes identically before block " +
                    std::to_string(j),
                j);
        }
        if (t >= 2)
            throw GapExceedsTwo("normal-index gap " + std::to_string(t + 1) +
                                    " at block " + std::to_string(j),
                                j);
        int k = t + 1;
        if (f.order() < 2 * k)
            throw InsufficientMoments("block " + std::to_string(j) + " needs " +
                                          std::to_string(2 * k) +
                                          " coefficients, have " +
                                          std::to_string(f.order()),
                                      j);
        // Local moments of the current (normalized) function.
        std::vector<Scalar> loc;
        for (int i = 0; i < 2 * k; ++i) loc.push_back(-f.coeff(i));
        MomentSequence local(std::move(loc));
        int eps = local.at(t).sign();
        Poly p = det_formula_P(local, k);

        // One Schur step: -1/f = eps * p + b^2 * fhat.
        LaurentParts rec_parts = series_reciprocal(f);
        if (bk == Backend::Exact &&
            rec_parts.poly != p.scaled(Scalar::from_int(eps, bk)))
            throw std::logic_error(
                "Schur step: reciprocal polynomial part disagrees with the "
                "determinant formula");
        Series r = rec_parts.tail;

        GJMBlock blk;
        blk.k = k;
        blk.p0 = p.coeff(0);
        if (k == 2) blk.p1 = p.coeff(1);
        blk.eps = eps;

        int tn = r.first_nonzero();
        if (tn < 0) {
            blocks.push_back(std::move(blk));
            if (j + 1 < depth) {
                if (r.order() == 0)
                    throw InsufficientMoments(
                        "ran out of series coefficients after block " +
                            std::to_string(j),
                        j + 1);
                throw RationalTermination(
                    "the function is rational: expansion terminates after block " +
                        std::to_string(j),
                    j + 1);
            }
            break;
        }
        Scalar b2 = r.coeff(tn).abs();
        int eps_next = (-r.coeff(tn)).sign();
        blk.c = Scalar::from_int(eps * eps_next, bk) * b2;
        blocks.push_back(std::move(blk));
        f = r.scaled(Scalar::one(bk) / b2);
    }
    return {GJM(std::move(blocks)), rec};
}

GramMatrix gram(const GJM& G, int depth) {
    if (depth < 0 || depth > G.depth())
        throw InsufficientDepth("gram matrix of " + std::to_string(depth) +
                                    " blocks from " + std::to_string(G.depth()),
                                depth);
    const Backend bk = G.backend();
    GramMatrix g;
    for (int j = 0; j < depth; ++j) {
        const GJMBlock& b = G.block(j);
        Scalar eps = Scalar::from_int(b.eps, bk);
        if (b.k == 1) {
            ScalarMatrix m(1, 1, bk);
            m.at(0, 0) = eps;
            g.blocks.push_back(std::move(m));
        } else {
            ScalarMatrix m(2, 2, bk);
            m.at(0, 1) = eps;
            m.at(1, 0) = eps;
            m.at(1, 1) = -eps * *b.p1;
            g.blocks.push_back(std::move(m));
        }
    }
    return g;
}

ScalarMatrix GramMatrix::dense() const {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    Backend bk = blocks.empty() ? Backend::Exact : blocks.front().backend();
    ScalarMatrix m(n, n, bk);
    int o = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(o + i, o + j) = b.at(i, j);
        o += b.rows();
    }
    return m;
}

RationalFn m_function(const GJM& G, int j) {
    if (j < 1)
        throw InsufficientDepth("m-function needs j >= 1", j);
    GJMPolyPair pp = gjm_polys(G, j);
    RationalFn f;
    f.num = -pp.Q[j];
    f.den = pp.P[j];
    f.j = j;
    f.nj = G.nseq()[j];
    f.kind = PadeKind::Diagonal;
    return f.reduced();
}

MomentSequence gjm_moments(const GJM& G, int count) {
    if (count < 1) throw std::invalid_argument("moment count must be >= 1");
    // The truncation to n rows determines s_k exactly for k <= 2n - 1; the
    // k = 2n moment already feels the first coupling outside the truncation.
    if (count - 1 > 2 * G.dim() - 1)
        throw InsufficientDepth("need 2*n_depth >= " + std::to_string(count) +
                                    " for that many reconstructed moments",
                                count);
    const Backend bk = G.backend();
    ScalarMatrix J = G.truncation(0, G.depth());
    ScalarMatrix Gm = gram(G, G.depth()).dense();
    const int n = J.rows();
    std::vector<Scalar> w(n, Scalar::zero(bk));  // G e_0
    for (int i = 0; i < n; ++i) w[i] = Gm.at(i, 0);
    std::vector<Scalar> v(n, Scalar::zero(bk));
    v[0] = Scalar::one(bk);
    std::vector<Scalar> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        Scalar acc = Scalar::zero(bk);
        for (int i = 0; i < n; ++i) acc += v[i] * w[i];
        out.push_back(acc);
        v = J.apply_transposed(v);
    }
    return MomentSequence(std::move(out));
}

}  // namespace darboux
