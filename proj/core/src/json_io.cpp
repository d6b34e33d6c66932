#include "darboux/json_io.hpp"

#include <json.hpp>

#include "darboux/errors.hpp"

namespace darboux::jsonio {

using nlohmann::json;

namespace {

json scalar_to_json(const Scalar& x) {
    if (x.is_exact()) return x.str();
    return x.to_double();
}

Scalar scalar_from_json(const json& v, Backend b) {
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), b);
    if (v.is_number_integer())
        return Scalar::from_int(v.get<long>(), b);
    if (v.is_number_float()) {
        if (b == Backend::Exact)
            throw std::invalid_argument(
                "non-integral JSON number in exact mode; use a \"p/q\" string");
        return Scalar::flt(v.get<double>());
    }
    throw std::invalid_argument("expected a scalar (string or number)");
}

json scalars_to_json(const std::vector<Scalar>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(scalar_to_json(x));
    return a;
}

std::vector<Scalar> scalars_from_json(const json& a, Backend b) {
    if (!a.is_array()) throw std::invalid_argument("expected an array of scalars");
    std::vector<Scalar> xs;
    xs.reserve(a.size());
    for (const auto& v : a) xs.push_back(scalar_from_json(v, b));
    return xs;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    return json::parse(text);  // throws nlohmann's parse_error on bad input
}

}  // namespace

std::string to_json(const MonicJacobi& J) {
    json j;
    j["b"] = scalars_to_json(J.b());
    j["c"] = scalars_to_json(J.c());
    return dump(j);
}

MonicJacobi jacobi_from_json(const std::string& text, Backend b) {
    json j = parse(text);
    return MonicJacobi(scalars_from_json(j.at("b"), b),
                       scalars_from_json(j.at("c"), b));
}

std::string to_json(const MomentSequence& s) {
    json j;
    j["moments"] = scalars_to_json(s.s);
    if (s.s_minus1) j["s_minus1"] = scalar_to_json(*s.s_minus1);
    return dump(j);
}

MomentSequence moments_from_json(const std::string& text, Backend b) {
    json j = parse(text);
    MomentSequence s(scalars_from_json(j.at("moments"), b));
    if (j.contains("s_minus1")) s.s_minus1 = scalar_from_json(j["s_minus1"], b);
    return s;
}

std::string to_json(const GJM& g) {
    json blocks = json::array();
    for (int i = 0; i < g.depth(); ++i) {
        const GJMBlock& b = g.block(i);
        json jb;
        jb["k"] = b.k;
        jb["p0"] = scalar_to_json(b.p0);
        if (b.p1) jb["p1"] = scalar_to_json(*b.p1);
        if (b.c) jb["c"] = scalar_to_json(*b.c);
        jb["eps"] = b.eps;
        blocks.push_back(std::move(jb));
    }
    json j;
    j["blocks"] = std::move(blocks);
    return dump(j);
}

GJM gjm_from_json(const std::string& text, Backend bk) {
    json j = parse(text);
    std::vector<GJMBlock> blocks;
    for (const auto& jb : j.at("blocks")) {
        GJMBlock b;
        b.k = jb.at("k").get<int>();
        b.p0 = scalar_from_json(jb.at("p0"), bk);
        if (jb.contains("p1")) b.p1 = scalar_from_json(jb["p1"], bk);
        if (jb.contains("c")) b.c = scalar_from_json(jb["c"], bk);
        b.eps = jb.value("eps", 1);
        blocks.push_back(std::move(b));
    }
    return GJM(std::move(blocks));
}

namespace {

const char* kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::LUJacobi: return "lu_jacobi";
        case FactorKind::ULJacobi: return "ul_jacobi";
        case FactorKind::LUGjm: return "lu_gjm";
        case FactorKind::ULGjm: return "ul_gjm";
    }
    return "?";
}

FactorKind kind_from_name(const std::string& s) {
    if (s == "lu_jacobi") return FactorKind::LUJacobi;
    if (s == "ul_jacobi") return FactorKind::ULJacobi;
    if (s == "lu_gjm") return FactorKind::LUGjm;
    if (s == "ul_gjm") return FactorKind::ULGjm;
    throw std::invalid_argument("unknown factorization kind '" + s + "'");
}

}  // namespace

std::string to_json(const BlockFactors& f) {
    json payload = json::array();
    for (const auto& e : f.entries()) {
        json je;
        je["u0"] = scalar_to_json(e.u0);
        if (e.u1) je["u1"] = scalar_to_json(*e.u1);
        if (e.e) je["e"] = scalar_to_json(*e.e);
        if (e.l) je["l"] = scalar_to_json(*e.l);
        payload.push_back(std::move(je));
    }
    json j;
    j["kind"] = kind_name(f.kind());
    j["kseq"] = f.kseq();
    j["payload"] = std::move(payload);
    if (f.param()) j["param"] = scalar_to_json(*f.param());
    if (f.kind() == FactorKind::LUGjm || f.kind() == FactorKind::ULGjm)
        j["eps0"] = f.source_eps0();
    return dump(j);
}

BlockFactors factors_from_json(const std::string& text, Backend bk) {
    json j = parse(text);
    FactorKind kind = kind_from_name(j.at("kind").get<std::string>());
    std::vector<int> kseq = j.at("kseq").get<std::vector<int>>();
    std::vector<FactorEntry> entries;
    const json& payload = j.at("payload");
    if (payload.size() != kseq.size())
        throw std::invalid_argument("kseq and payload sizes differ");
    for (size_t i = 0; i < payload.size(); ++i) {
        const json& je = payload[i];
        FactorEntry e;
        e.k = kseq[i];
        e.u0 = scalar_from_json(je.at("u0"), bk);
        if (je.contains("u1")) e.u1 = scalar_from_json(je["u1"], bk);
        if (je.contains("e")) e.e = scalar_from_json(je["e"], bk);
        if (je.contains("l")) e.l = scalar_from_json(je["l"], bk);
        entries.push_back(std::move(e));
    }
    std::optional<Scalar> param;
    if (j.contains("param")) param = scalar_from_json(j["param"], bk);
    return BlockFactors(kind, std::move(entries), std::move(param),
                        j.value("eps0", 1));
}

std::string to_json(const CholeskyFactors& f) {
    json payload = json::array();
    for (int j = 0; j < f.depth(); ++j) {
        json je;
        je["l0"] = scalar_to_json(f.lambdas[j].l0);
        if (f.lambdas[j].l1) je["l1"] = scalar_to_json(*f.lambdas[j].l1);
        if (j < static_cast<int>(f.lhat.size()))
            je["lhat"] = scalar_to_json(f.lhat[j]);
        payload.push_back(std::move(je));
    }
    json j;
    j["kind"] = "cholesky";
    j["kseq"] = f.kseq;
    j["payload"] = std::move(payload);
    return dump(j);
}

std::string to_json(const NormalIndexReport& rep) {
    json j;
    j["indices"] = rep.indices;
    j["gaps"] = rep.gaps;
    j["hankel_dets"] = scalars_to_json(rep.hankel_dets);
    j["gap_exceeds_two"] = rep.gap_exceeds_two;
    return dump(j);
}

std::string to_json(const RationalFn& f) {
    json j;
    j["num"] = scalars_to_json(f.num.coeffs());
    j["den"] = scalars_to_json(f.den.coeffs());
    j["j"] = f.j;
    j["nj"] = f.nj;
    switch (f.kind) {
        case PadeKind::Diagonal: j["kind"] = "diagonal"; break;
        case PadeKind::Modified: j["kind"] = "modified"; break;
        case PadeKind::DPlus: j["kind"] = "dplus"; break;
    }
    return dump(j);
}

std::string to_json(const DiagnosticsReport& rep) {
    json ratios = json::array();
    for (const auto& [j, v] : rep.ratios)
        ratios.push_back(json::array({j, scalar_to_json(v)}));
    json radii = json::array();
    for (const auto& [j, v] : rep.pole_radii)
        radii.push_back(json::array({j, v}));
    json j;
    j["ratios"] = std::move(ratios);
    j["running_max"] = scalar_to_json(rep.running_max);
    j["pole_radii"] = std::move(radii);
    j["verdict_threshold"] = rep.verdict_threshold;
    j["exceeded"] = rep.exceeded;
    return dump(j);
}

MeasureInput measure_from_json(const std::string& text, Backend b) {
    json j = parse(text);
    MeasureInput in;
    if (j.contains("atoms")) {
        for (const auto& ja : j["atoms"]) {
            MeasureSpec::Atom a;
            a.t = scalar_from_json(ja.at("t"), b);
            a.a = scalar_from_json(ja.at("a"), b);
            in.spec.atoms.push_back(std::move(a));
        }
    }
    if (j.contains("named")) {
        std::string n = j["named"].get<std::string>();
        if (n == "chebyshevU")
            in.spec.named = MeasureSpec::Named::ChebyshevU;
        else if (n == "arcsine")
            in.spec.named = MeasureSpec::Named::Arcsine;
        else
            throw std::invalid_argument("unknown named measure '" + n + "'");
    }
    if (j.contains("count")) in.count = j["count"].get<int>();
    if (j.contains("support_min")) in.spec.support_min = j["support_min"].get<double>();
    if (j.contains("support_max")) in.spec.support_max = j["support_max"].get<double>();
    if (j.contains("alpha")) in.spec.alpha = j["alpha"].get<double>();
    if (j.contains("beta")) in.spec.beta = j["beta"].get<double>();
    return in;
}

std::string to_json(const MeasureSpec& m) {
    json j;
    json atoms = json::array();
    for (const auto& a : m.atoms) {
        json ja;
        ja["t"] = scalar_to_json(a.t);
        ja["a"] = scalar_to_json(a.a);
        atoms.push_back(std::move(ja));
    }
    j["atoms"] = std::move(atoms);
    if (m.named == MeasureSpec::Named::ChebyshevU) j["named"] = "chebyshevU";
    if (m.named == MeasureSpec::Named::Arcsine) j["named"] = "arcsine";
    if (m.support_min) j["support_min"] = *m.support_min;
    if (m.support_max) j["support_max"] = *m.support_max;
    if (m.alpha) j["alpha"] = *m.alpha;
    if (m.beta) j["beta"] = *m.beta;
    return dump(j);
}

InputKind classify_input(const std::string& text) {
    json j = parse(text);
    if (j.contains("blocks")) return InputKind::Gjm;
    if (j.contains("b") && j.contains("c")) return InputKind::Jacobi;
    if (j.contains("moments")) return InputKind::Moments;
    if (j.contains("atoms") || j.contains("named")) return InputKind::Measure;
    throw std::invalid_argument(
        "input JSON is none of: jacobi {b,c}, gjm {blocks}, moments, measure");
}

}  // namespace darboux::jsonio
