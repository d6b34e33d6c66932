#include "darboux/pade.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

#include "darboux/errors.hpp"
#include "darboux/factorization.hpp"
#include "darboux/gjm.hpp"
#include "darboux/orthopoly.hpp"
#include "darboux/series.hpp"

namespace darboux {

RationalFn diagonal_pade(const MomentSequence& s, int j) {
    if (j < 1) throw std::invalid_argument("diagonal approximant needs j >= 1");
    auto [G, rec] = schur_pfraction(s, j);
    GJMPolyPair pp = gjm_polys(G, j);
    RationalFn f;
    // -Q_j/P_j approximates the normalized function; undo the scale.
    f.num = (-pp.Q[j]).scaled(rec.scale);
    f.den = pp.P[j];
    f.j = j;
    f.nj = G.nseq()[j];
    f.kind = PadeKind::Diagonal;
    return f.reduced();
}

int pade_order_check(const RationalFn& f, const MomentSequence& s) {
    if (f.den.is_zero()) throw ZeroDenominator("order check of x/0");
    const int order = s.size();
    Poly poly_part;
    Series a = rational_series(f.num, f.den, order, &poly_part);
    if (!poly_part.is_zero()) return 0;
    const bool exact = s.backend() == Backend::Exact;
    int matched = 0;
    for (int i = 0; i < order; ++i) {
        Scalar want = -s.at(i);
        if (exact) {
            if (a.coeff(i) != want) break;
        } else {
            double diff = a.coeff(i).to_double() - want.to_double();
            if (std::abs(diff) >
                config::tau_zero() * std::max(1.0, std::abs(want.to_double())))
                break;
        }
        ++matched;
    }
    return matched;
}

RationalFn modified_pade(const MonicJacobi& J, const Scalar& tau, int j) {
    if (j < 1) throw std::invalid_argument("modified approximant needs j >= 1");
    PolyPair pp = classical_polys(J, j);
    Poly den = pp.P[j] + pp.P[j - 1].scaled(tau);
    if (den.is_zero())
        throw DegenerateDenominator("P_n + tau P_{n-1} vanishes identically", j);
    RationalFn f;
    f.num = -(pp.Q[j] + pp.Q[j - 1].scaled(tau));
    f.den = std::move(den);
    f.j = j;
    f.nj = j;
    f.kind = PadeKind::Modified;
    return f.reduced();
}

RationalFn dplus_pade(const MonicJacobi& J, const Scalar& s_minus1, int j,
                      Scalar* tau_out) {
    if (j < 1) throw std::invalid_argument("needs j >= 1");
    PolyPair pp = classical_polys(J, j);
    const Backend bk = J.backend();
    Scalar den0 = pp.Q[j - 1].eval(Scalar::zero(bk)) -
                  s_minus1 * pp.P[j - 1].eval(Scalar::zero(bk));
    if (den0.is_zero())
        throw ZeroDenominator("(Q - s_{-1}P)(0) vanishes at index " +
                                  std::to_string(j - 1),
                              j - 1);
    Scalar num0 = pp.Q[j].eval(Scalar::zero(bk)) -
                  s_minus1 * pp.P[j].eval(Scalar::zero(bk));
    Scalar tau = -num0 / den0;
    if (tau_out) *tau_out = tau;
    RationalFn mod = modified_pade(J, tau, j);
    RationalFn f;
    f.num = mod.num - mod.den.scaled(s_minus1);
    f.den = Poly::monomial(1, bk) * mod.den;
    f.j = j;
    f.nj = j;
    f.kind = PadeKind::DPlus;
    return f.reduced();
}

namespace {

// Parlett-Reinsch balancing, radix 2.
void balance_in_place(Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    const double radix = 2.0, sq = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0, s = c + r;
            while (c < g) {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double gi = 1.0 / f;
                a.row(i) *= gi;
                a.col(i) *= f;
            }
        }
    }
}

std::vector<std::complex<double>> eigen_of(Eigen::MatrixXd m) {
    balance_in_place(m);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out;
    out.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()[i]);
    return out;
}

}  // namespace

std::vector<std::complex<double>> companion_roots(const Poly& p) {
    const int d = p.degree();
    if (d <= 0) return {};
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    const double lead = p.leading().to_double();
    for (int i = 0; i < d; ++i) {
        c(i, d - 1) = -p.coeff(i).to_double() / lead;
        if (i + 1 < d) c(i + 1, i) = 1.0;
    }
    return eigen_of(std::move(c));
}

std::vector<std::complex<double>> poles(const RationalFn& f) {
    return companion_roots(f.den);
}

std::vector<std::complex<double>> dense_eigenvalues(const ScalarMatrix& m) {
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a(i, j) = m.at(i, j).to_double();
    return eigen_of(std::move(a));
}

std::vector<double> modified_pole_oracle(const MonicJacobi& J, double tau,
                                         int j) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(j, j);
    for (int i = 0; i < j; ++i) {
        a(i, i) = J.b(i).to_double();
        if (i + 1 < j) {
            double root = std::sqrt(J.c(i).to_double());
            a(i, i + 1) = root;
            a(i + 1, i) = root;
        }
    }
    // det(lambda - (J + diag(0,..,t))) = P_j - t P_{j-1}, so the poles of the
    // tau-modified approximant (denominator P_j + tau P_{j-1}) are the
    // eigenvalues of the truncation perturbed by -tau.
    a(j - 1, j - 1) -= tau;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        a, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + j);
    return out;
}

DiagnosticsReport boundedness_diagnostic(const MonicJacobi& J, DiagKind kind,
                                         std::optional<Scalar> s_minus1,
                                         int depth, bool with_poles,
                                         double threshold) {
    if (kind == DiagKind::G && !s_minus1)
        throw ZeroParameter("kind G diagnostics need the parameter s_{-1}");
    DiagnosticsReport rep;
    rep.verdict_threshold = threshold;
    const Backend bk = J.backend();
    rep.running_max = Scalar::zero(bk);

    if (kind == DiagKind::C) {
        BlockFactors f = lu_jacobi(J, depth);
        for (int j = 0; j < depth; ++j) {
            Scalar r = f.entry(j).u0.abs();
            rep.ratios.emplace_back(j + 1, r);
            if (r > rep.running_max) rep.running_max = r;
        }
    } else {
        BlockFactors f = ul_jacobi(J, *s_minus1, depth);
        for (int j = 0; j + 1 < depth; ++j) {
            Scalar r = f.entry(j).l->abs();
            rep.ratios.emplace_back(j + 1, r);
            if (r > rep.running_max) rep.running_max = r;
        }
    }
    rep.exceeded = rep.running_max.to_double() > threshold;

    if (with_poles) {
        // Poles of the diagonal approximants of the transformed function,
        // i.e. the roots of the first-kind polynomials of the transform.
        GJM g = kind == DiagKind::C ? christoffel(J, depth)
                                    : geronimus(J, *s_minus1, depth);
        GJMPolyPair pp = gjm_polys(g, depth);
        for (int j = 1; j <= depth; ++j) {
            double radius = 0.0;
            for (const auto& z : companion_roots(pp.P[j].to_float()))
                radius = std::max(radius, std::abs(z));
            rep.pole_radii.emplace_back(j, radius);
        }
    }
    return rep;
}

std::vector<ScanRow> convergence_scan(
    const ComplexFn& oracle, const MomentSequence& s,
    const std::vector<std::complex<double>>& lambdas, int jmax) {
    std::vector<ScanRow> rows;
    for (int j = 1; j <= jmax; ++j) {
        RationalFn f;
        try {
            f = diagonal_pade(s, j);
        } catch (const RationalTermination&) {
            break;  // rational input: every later approximant is the same
        }
        std::vector<std::complex<double>> ps = poles(f);
        double radius = 0.0;
        for (const auto& z : ps) radius = std::max(radius, std::abs(z));
        for (const auto& lam : lambdas) {
            ScanRow row;
            row.j = j;
            row.nj = f.nj;
            row.lambda = lam;
            row.max_pole_radius = radius;
            for (const auto& z : ps)
                if (std::abs(lam - z) <=
                    config::tau_zero() * std::max(1.0, std::abs(lam)))
                    row.pole_collision = true;
            row.approx = f.eval(lam);
            row.abs_error = std::abs(row.approx - oracle(lam));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ComplexFn markov_oracle(const MeasureSpec& m) {
    // sqrt(lambda^2 - 1) on the branch that behaves like lambda at infinity
    auto branch_root = [](std::complex<double> lam) {
        return lam * std::sqrt(1.0 - 1.0 / (lam * lam));
    };
    std::vector<std::pair<double, double>> atoms;
    for (const auto& a : m.atoms)
        atoms.emplace_back(a.t.to_double(), a.a.to_double());
    MeasureSpec::Named named = m.named;
    return [atoms, named, branch_root](std::complex<double> lam) {
        std::complex<double> v = 0.0;
        for (const auto& [t, a] : atoms) v += a / (t - lam);
        if (named == MeasureSpec::Named::ChebyshevU)
            v += -2.0 * lam + 2.0 * branch_root(lam);
        else if (named == MeasureSpec::Named::Arcsine)
            v += -1.0 / branch_root(lam);
        return v;
    };
}

}  // namespace darboux
