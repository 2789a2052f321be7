#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "polyurn/law.hpp"
#include "polyurn/models.hpp"
#include "polyurn/urn.hpp"

namespace polyurn {

// All machine output goes through ordered_json so key order (and therefore
// every emitted byte) is fixed by construction order, not by hashing.
using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);
// Strict inverse of format_double; throws SpecError on trailing junk.
double parse_double(std::string_view text);

// Rationals travel as canonical "p/q" strings: JSON numbers cannot hold
// arbitrary-precision values, and strings keep exactness across round-trips.
Json json_of(const Rational& r);
Rational rational_from_json(const Json& j);

Json json_of(const RatVector& v);
RatVector rat_vector_from_json(const Json& j);

Json json_of(const RatMatrix& a);
RatMatrix rat_matrix_from_json(const Json& j);

Json json_of(const UrnSpec& spec);
UrnSpec urn_spec_from_json(const Json& j);

Json json_of(const AsymptoticLaw& law);
AsymptoticLaw law_from_json(const Json& j);

// Floating form is emit-only (reports); no parse counterpart.
Json json_of(const NumericLaw& law);

// Spectrum report: eigenvalues with exact tags where known, Perron pair,
// exactness flags.  Emit-only.
Json json_of(const SpectralData& sd);

Json json_of(const ModelBundle& bundle);
ModelBundle model_bundle_from_json(const Json& j);

const char* regime_name_of(Regime r);  // alias of regime_name, here for symmetry
Regime regime_from_name(std::string_view name);
LawMethod law_method_from_name(std::string_view name);

// Minimal CSV (RFC-ish): cells containing comma, quote or newline are quoted
// with internal quotes doubled.
std::string csv_cell(std::string_view raw);
std::string csv_row(const std::vector<std::string>& cells);  // includes trailing '\n'

}  // namespace polyurn
