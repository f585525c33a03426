#pragma once

#include <json.hpp>

#include "mccg/parser.hpp"

namespace mccg {

// {"topic": v, "comment": {"focus": v, "ground": [v...]}} where a value is
// a term string, {"inferrable": true}, or a nested node object.
nlohmann::json isToJson(const ISNode& node);
ISNode isFromJson(const nlohmann::json& j);

nlohmann::json resultToJson(const ParseResult& r);
// Reconstructs (as, is); the trace is not serialized.
ParseResult resultFromJson(const nlohmann::json& j);

}  // namespace mccg
