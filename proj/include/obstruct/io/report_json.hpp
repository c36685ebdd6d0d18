#pragma once

#include <json.hpp>

#include "obstruct/analysis/report.hpp"

namespace obstruct {

// JSON forms of the report types. Every *_from_json inverts the matching
// to_json exactly and throws InvalidInput on a malformed document.

nlohmann::json to_json(const Coefficients& c);
nlohmann::json to_json(const HomologyProfile& p);
nlohmann::json to_json(const InducedMap& m);
nlohmann::json to_json(const DecompositionReport& r);

Coefficients coefficients_from_json(const nlohmann::json& j);
HomologyProfile profile_from_json(const nlohmann::json& j);
InducedMap induced_map_from_json(const nlohmann::json& j);
DecompositionReport report_from_json(const nlohmann::json& j);

}  // namespace obstruct
