#pragma once

#include "sdg/audit.hpp"
#include "sdg/colimit.hpp"
#include "sdg/replay.hpp"

#include <json.hpp>

#include <string>

namespace sdg {

// JSON wire formats (schemas/ carries the matching schema files): generators
// as integers, monomials as sorted index arrays, rationals as
// {"num": string, "den": string}.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SmallObject& o);
SmallObject small_object_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeilPoly& p);
WeilPoly weil_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolyMap& f);
PolyMap poly_map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ColimitReport& r);

nlohmann::json trace_to_json(const ProofTrace& t);
nlohmann::json audit_to_json(const AuditResult& a);

}  // namespace sdg
