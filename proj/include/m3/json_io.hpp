// JSON formats: diagrams, braid words, family specs, polynomials, rationals,
// and the full invariant report.
#pragma once

#include <string>

#include "m3/braid.hpp"
#include "m3/diagram.hpp"
#include "m3/families.hpp"
#include "m3/invariants.hpp"
#include "m3/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace m3 {

using Json = nlohmann::json;

LinkDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const LinkDiagram& d);

BraidWord braid_from_json(const Json& j);
FamilySpec family_from_json(const Json& j);

Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json rational_to_json(const Rational& r);

Json report_to_json(const InvariantReport& rep, const LinkDiagram& d);

// Any of: Diagram JSON, Braid JSON {"strands":..,"word":..}, or FamilySpec
// JSON {"family":..,"params":..}. Errors carry Err::Parse with the offending
// field in the message.
LinkDiagram link_from_json_text(const std::string& text);

// disk-backed memo for the full-polynomial engine (one JSON object per line)
void load_cache_file(const std::string& path, MemoCache& cache);
void save_cache_file(const std::string& path, const MemoCache& cache);

}  // namespace m3
