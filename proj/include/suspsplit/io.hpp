#pragma once

#include <string>

#include "json.hpp"
#include "suspsplit/decomposer.hpp"
#include "suspsplit/normalizer.hpp"
#include "suspsplit/oracle.hpp"

namespace suspsplit {

inline constexpr int kSchemaVersion = 1;

// Both parsers throw SchemaError on malformed documents or unknown keys.
ManifoldInput parse_decompose(const nlohmann::json& doc);
AttachingVector parse_normalize(const nlohmann::json& doc);

nlohmann::json to_json(const SpaceTerm& t);
nlohmann::json to_json(const Wedge& w);
nlohmann::json to_json(const DecompositionResult& r);
nlohmann::json to_json(const Normalized& n);
nlohmann::json to_json(const Report& r);

// Main wedge on the first line, then "or <wedge>  [if <condition>]" per alternative.
std::string format_result(const DecompositionResult& r);
std::string format_normalized(const Normalized& n);

}  // namespace suspsplit
