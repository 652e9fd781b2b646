#include "orna/io.hpp"

#include <fstream>

#include "orna/errors.hpp"

namespace orna {

nlohmann::json ornamentation_to_json(const Ornamentation& d) {
  nlohmann::json j;
  j["tree"] = d.tree().render();
  if (d.tree().is_chain()) {
    j["g"] = to_g_sequence(d).g;
  } else {
    j["ornaments"] = d.ornaments();
  }
  return j;
}

Ornamentation ornamentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tree") || !j["tree"].is_string()) {
    throw DomainError("ornamentation record needs a \"tree\" string");
  }
  TreePtr tree = make_tree(j["tree"].get<std::string>());
  if (j.contains("g")) {
    GSequence g;
    g.g = j["g"].get<std::vector<int>>();
    return from_g_sequence(std::move(tree), g);
  }
  if (j.contains("ornaments")) {
    auto sets = j["ornaments"].get<std::vector<std::vector<NodeId>>>();
    return Ornamentation(std::move(tree), std::move(sets));
  }
  throw DomainError("ornamentation record needs \"ornaments\" or \"g\"");
}

Ornamentation read_ornamentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
  return ornamentation_from_json(j);
}

}  // namespace orna
