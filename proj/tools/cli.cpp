#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "darboux/cholesky.hpp"
#include "darboux/errors.hpp"
#include "darboux/factorization.hpp"
#include "darboux/gjm.hpp"
#include "darboux/json_io.hpp"
#include "darboux/moments.hpp"
#include "darboux/pade.hpp"

namespace darboux::cli {

namespace {

struct Options {
    std::string input, output;
    int depth = 4;
    std::string backend = "exact";
    std::string param;
    std::string lambda;
    std::string grid;
    std::string kind;
    std::string format = "json";
    int count = 0;
    int j = 4;
    int jmax = 8;
    double threshold = 1e6;
    double tau_zero = 0.0;
};

Backend backend_of(const Options& o) {
    if (o.backend == "exact") return Backend::Exact;
    if (o.backend == "float") return Backend::Float;
    throw CLI::ValidationError("--backend must be 'exact' or 'float'");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw CLI::ValidationError("cannot open output file '" + o.output + "'");
    f << text;
}

Scalar parse_param(const Options& o, Backend bk) {
    if (o.param.empty())
        throw CLI::ValidationError("this operation needs --param (s_{-1})");
    return Scalar::parse(o.param, bk);
}

// Moment prefix from whatever the input file holds.
MomentSequence load_moments(const std::string& text, Backend bk, int count) {
    switch (jsonio::classify_input(text)) {
        case jsonio::InputKind::Moments:
            return jsonio::moments_from_json(text, bk);
        case jsonio::InputKind::Jacobi:
            return moments_from_jacobi(jsonio::jacobi_from_json(text, bk), count);
        case jsonio::InputKind::Measure: {
            auto in = jsonio::measure_from_json(text, bk);
            return moments_from_measure(in.spec, in.count.value_or(count));
        }
        default:
            throw CLI::ValidationError("input does not describe moments");
    }
}

std::string csv_double(double x) {
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

int dispatch(const std::string& cmd, const std::string& mode, const Options& o,
             std::ostream& out) {
    const Backend bk = backend_of(o);
    const std::string text = slurp(o.input);

    if (cmd == "moments") {
        int count = o.count > 0 ? o.count : 16;
        emit(o, out, jsonio::to_json(load_moments(text, bk, count)));
        return 0;
    }

    if (cmd == "normal-indices") {
        MomentSequence s = load_moments(text, bk, std::max(2 * o.depth - 1, 1));
        emit(o, out, jsonio::to_json(normal_indices(s, o.depth)));
        return 0;
    }

    if (cmd == "factor") {
        auto kind = jsonio::classify_input(text);
        if (mode == "lu") {
            if (kind == jsonio::InputKind::Jacobi)
                emit(o, out, jsonio::to_json(lu_jacobi(
                                 jsonio::jacobi_from_json(text, bk), o.depth)));
            else
                emit(o, out, jsonio::to_json(lu_gjm(
                                 jsonio::gjm_from_json(text, bk), o.depth)));
            return 0;
        }
        if (mode == "ul") {
            Scalar p = parse_param(o, bk);
            if (kind == jsonio::InputKind::Jacobi)
                emit(o, out, jsonio::to_json(ul_jacobi(
                                 jsonio::jacobi_from_json(text, bk), p, o.depth)));
            else
                emit(o, out, jsonio::to_json(ul_gjm(
                                 jsonio::gjm_from_json(text, bk), p, o.depth)));
            return 0;
        }
        if (mode == "cholesky") {
            auto [js, psi] = symmetrize(jsonio::jacobi_from_json(text, bk));
            emit(o, out, jsonio::to_json(generalized_cholesky(js, o.depth)));
            return 0;
        }
        throw CLI::ValidationError("factor mode must be lu, ul or cholesky");
    }

    if (cmd == "transform") {
        if (mode == "christoffel") {
            emit(o, out, jsonio::to_json(christoffel(
                             jsonio::jacobi_from_json(text, bk), o.depth)));
            return 0;
        }
        if (mode == "geronimus") {
            emit(o, out,
                 jsonio::to_json(geronimus(jsonio::jacobi_from_json(text, bk),
                                           parse_param(o, bk), o.depth)));
            return 0;
        }
        if (mode == "inv-christoffel") {
            emit(o, out, jsonio::to_json(inverse_christoffel(
                             jsonio::gjm_from_json(text, bk), parse_param(o, bk),
                             o.depth)));
            return 0;
        }
        if (mode == "inv-geronimus") {
            emit(o, out, jsonio::to_json(inverse_geronimus(
                             jsonio::gjm_from_json(text, bk), o.depth)));
            return 0;
        }
        throw CLI::ValidationError("unknown transform '" + mode + "'");
    }

    if (cmd == "pade") {
        if (mode == "eval") {
            MomentSequence s = load_moments(text, bk, 4 * o.j + 4);
            RationalFn f = diagonal_pade(s, o.j);
            std::string body = jsonio::to_json(f);
            if (!o.lambda.empty()) {
                Scalar lam = Scalar::parse(o.lambda, bk);
                nlohmann::json j = nlohmann::json::parse(body);
                j["lambda"] = lam.str();
                j["value"] = f.eval(lam).str();
                body = j.dump(2) + "\n";
            }
            emit(o, out, body);
            return 0;
        }
        if (mode == "poles") {
            MomentSequence s = load_moments(text, bk, 4 * o.j + 4);
            RationalFn f = diagonal_pade(s, o.j);
            std::ostringstream ss;
            ss << "[\n";
            auto ps = poles(f);
            for (size_t i = 0; i < ps.size(); ++i)
                ss << "  [" << csv_double(ps[i].real()) << ", "
                   << csv_double(ps[i].imag()) << "]"
                   << (i + 1 < ps.size() ? ",\n" : "\n");
            ss << "]\n";
            emit(o, out, ss.str());
            return 0;
        }
        if (mode == "scan") {
            if (jsonio::classify_input(text) != jsonio::InputKind::Measure)
                throw CLI::ValidationError(
                    "pade scan needs a measure input (the oracle)");
            auto in = jsonio::measure_from_json(text, bk);
            int count = in.count.value_or(std::max(o.count, 4 * o.jmax + 4));
            MomentSequence s = moments_from_measure(in.spec, count);
            double a, b;
            int n;
            if (std::sscanf(o.grid.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 ||
                n < 1)
                throw CLI::ValidationError("--grid must be a:b:n");
            std::vector<std::complex<double>> lambdas;
            for (int i = 0; i < n; ++i)
                lambdas.emplace_back(
                    n == 1 ? a : a + (b - a) * i / double(n - 1), 0.0);
            auto rows = convergence_scan(markov_oracle(in.spec), s, lambdas,
                                         o.jmax);
            std::ostringstream ss;
            ss << "j,n_j,lambda_re,lambda_im,approx_re,approx_im,abs_error,"
                  "max_pole_radius,pole_collision\n";
            for (const auto& r : rows)
                ss << r.j << ',' << r.nj << ',' << csv_double(r.lambda.real())
                   << ',' << csv_double(r.lambda.imag()) << ','
                   << csv_double(r.approx.real()) << ','
                   << csv_double(r.approx.imag()) << ','
                   << csv_double(r.abs_error) << ','
                   << csv_double(r.max_pole_radius) << ','
                   << (r.pole_collision ? 1 : 0) << '\n';
            emit(o, out, ss.str());
            return 0;
        }
        if (mode == "diagnose") {
            MonicJacobi J = jsonio::jacobi_from_json(text, bk);
            DiagKind k;
            if (o.kind == "C")
                k = DiagKind::C;
            else if (o.kind == "G")
                k = DiagKind::G;
            else
                throw CLI::ValidationError("--kind must be C or G");
            std::optional<Scalar> p;
            if (k == DiagKind::G) p = parse_param(o, bk);
            DiagnosticsReport rep =
                boundedness_diagnostic(J, k, p, o.depth, true, o.threshold);
            if (o.format == "json") {
                emit(o, out, jsonio::to_json(rep));
                return 0;
            }
            std::ostringstream ss;
            ss << "j,ratio,running_max,max_pole_radius\n";
            Scalar run = Scalar::zero(bk);
            for (size_t i = 0; i < rep.ratios.size(); ++i) {
                const auto& [j, v] = rep.ratios[i];
                if (v > run) run = v;
                double radius = i < rep.pole_radii.size()
                                    ? rep.pole_radii[i].second
                                    : 0.0;
                ss << j << ',' << v.str() << ',' << run.str() << ','
                   << csv_double(radius) << '\n';
            }
            emit(o, out, ss.str());
            return 0;
        }
        throw CLI::ValidationError("unknown pade mode '" + mode + "'");
    }

    throw CLI::ValidationError("unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    if (const char* env = std::getenv("DARBOUX_TAU_ZERO")) {
        try {
            config::set_tau_zero(std::stod(env));
        } catch (const std::exception&) {
            err << "invalid DARBOUX_TAU_ZERO value '" << env << "'\n";
            return 1;
        }
    }

    CLI::App app{"Darboux transformations of monic Jacobi matrices and Pade "
                 "convergence diagnostics"};
    app.require_subcommand(1);
    Options o;
    std::string mode;

    auto add_common = [&](CLI::App* sub, bool with_mode) {
        if (with_mode) sub->add_option("mode", mode)->required();
        sub->add_option("--input", o.input)->required();
        sub->add_option("--output", o.output);
        sub->add_option("--depth", o.depth);
        sub->add_option("--backend", o.backend);
        sub->add_option("--param", o.param);
        sub->add_option("--lambda", o.lambda);
        sub->add_option("--grid", o.grid);
        sub->add_option("--kind", o.kind);
        sub->add_option("--format", o.format);
        sub->add_option("--count", o.count);
        sub->add_option("--j", o.j);
        sub->add_option("--jmax", o.jmax);
        sub->add_option("--threshold", o.threshold);
        sub->add_option("--tau-zero", o.tau_zero);
    };
    add_common(app.add_subcommand("moments", "moments of a measure or matrix"),
               false);
    add_common(app.add_subcommand("normal-indices",
                                  "Hankel-determinant normal indices"),
               false);
    add_common(app.add_subcommand("factor", "block factorizations: lu|ul|cholesky"),
               true);
    add_common(app.add_subcommand(
                   "transform",
                   "christoffel|geronimus|inv-christoffel|inv-geronimus"),
               true);
    add_common(app.add_subcommand("pade", "eval|poles|scan|diagnose"), true);

    std::vector<const char*> argv{"darboux"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()),
                  const_cast<char**>(argv.data()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }
    if (o.tau_zero > 0.0) config::set_tau_zero(o.tau_zero);

    try {
        std::string cmd = app.get_subcommands().front()->get_name();
        return dispatch(cmd, mode, o, out);
    } catch (const DomainError& e) {
        err << "{\"error\":\"" << e.code() << "\"";
        if (e.index()) err << ",\"index\":" << *e.index();
        err << ",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace darboux::cli
