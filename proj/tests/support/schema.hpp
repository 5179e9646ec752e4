#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace schema {

/// Validates `doc` against a JSON Schema using the subset of keywords the
/// report schema needs: type, enum, properties, required,
/// additionalProperties (bool or schema), items, minItems, minimum, anyOf
/// and local "#/$defs/..." references. Unknown keywords are ignored.
/// Returns one message per violation, prefixed with a JSON pointer.
std::vector<std::string> validate(const nlohmann::json& schema, const nlohmann::json& doc);

/// Reads the published schema from the source tree.
nlohmann::json load(const std::string& path);

}  // namespace schema
