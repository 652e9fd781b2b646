#pragma once

#include <string>

#include <json.hpp>

#include "orna/ornamentation.hpp"

namespace orna {

/// Record form: {"tree": "<paren>", "ornaments": [[...], ...]} with the
/// compact {"tree": ..., "g": [...]} form emitted (and accepted) for chains.
nlohmann::json ornamentation_to_json(const Ornamentation& d);
Ornamentation ornamentation_from_json(const nlohmann::json& j);

Ornamentation read_ornamentation_file(const std::string& path);

}  // namespace orna
