#ifndef DARBOUX_JSON_IO_HPP
#define DARBOUX_JSON_IO_HPP

#include <optional>
#include <string>

#include "darboux/cholesky.hpp"
#include "darboux/factorization.hpp"
#include "darboux/gjm.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/pade.hpp"
#include "darboux/rational_fn.hpp"

namespace darboux::jsonio {

// Exact scalars serialize as "p/q" strings so that JSON number precision
// never corrupts them; float scalars serialize as numbers. Parsing in exact
// mode accepts strings and integral numbers only.

std::string to_json(const MonicJacobi& J);
MonicJacobi jacobi_from_json(const std::string& text,
                             Backend b = Backend::Exact);

std::string to_json(const MomentSequence& s);
MomentSequence moments_from_json(const std::string& text,
                                 Backend b = Backend::Exact);

std::string to_json(const GJM& g);
GJM gjm_from_json(const std::string& text, Backend b = Backend::Exact);

std::string to_json(const BlockFactors& f);
BlockFactors factors_from_json(const std::string& text,
                               Backend b = Backend::Exact);

std::string to_json(const CholeskyFactors& f);

std::string to_json(const NormalIndexReport& rep);
std::string to_json(const RationalFn& f);
std::string to_json(const DiagnosticsReport& rep);

struct MeasureInput {
    MeasureSpec spec;
    std::optional<int> count;
};
MeasureInput measure_from_json(const std::string& text,
                               Backend b = Backend::Exact);
std::string to_json(const MeasureSpec& m);

enum class InputKind { Jacobi, Gjm, Moments, Measure };
/// Looks at the top-level keys to decide what a CLI input file holds.
InputKind classify_input(const std::string& text);

}  // namespace darboux::jsonio

#endif
