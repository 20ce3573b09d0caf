#pragma once

#include <string>

#include <json.hpp>

#include "rghw/code.hpp"

namespace rghw {

/// {"p": int, "m": int, "modulus": [int,...]}  (modulus omitted when m = 1)
nlohmann::json field_to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

/// Code-pair file: {"field": {...}, "n": int, "G1": [[int,...]], "G2": [[int,...]]}
/// with elements encoded as integer indices in [0, q).
nlohmann::json pair_to_json(const NestedPair& p);
NestedPair pair_from_json(const nlohmann::json& j);

NestedPair read_pair_file(const std::string& path);
void write_pair_file(const std::string& path, const NestedPair& p);

} // namespace rghw
