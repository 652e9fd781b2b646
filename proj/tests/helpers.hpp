#pragma once

#include <string>
#include <vector>

#include "orna/ornamentation.hpp"
#include "orna/tree.hpp"

namespace orna::test {

inline TreePtr chain(int n) {
  std::string text(n, '(');
  text.append(n, ')');
  return make_tree(text);
}

/// Tamari element of C_n from 1-based g values.
inline Ornamentation g(TreePtr tree, std::vector<int> values) {
  GSequence seq;
  seq.g = std::move(values);
  return from_g_sequence(std::move(tree), seq);
}

inline Ornamentation g(std::vector<int> values) {
  int n = static_cast<int>(values.size());
  return g(chain(n), std::move(values));
}

inline std::vector<TreePtr> trees_up_to(int max_nodes) {
  std::vector<TreePtr> out;
  for (int n = 1; n <= max_nodes; ++n) {
    for (RootedPlaneTree& t : enumerate_plane_trees(n)) {
      out.push_back(std::make_shared<const RootedPlaneTree>(std::move(t)));
    }
  }
  return out;
}

}  // namespace orna::test
