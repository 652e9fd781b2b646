#include "orna/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <sstream>

#include "orna/rank_orbit.hpp"

namespace orna {

int LatticeGraph::find(const Ornamentation& d) const {
  auto it = index.find(canonical_key(d));
  return it == index.end() ? -1 : it->second;
}

LatticeGraph enumerate_lattice(TreePtr tree, std::size_t cap) {
  // Downward BFS from delta_max; every element is reachable through cover
  // chains, and the canonical key dedups across parents.
  std::vector<Ornamentation> elements;
  std::vector<std::pair<int, int>> edges;  // (lower, upper) in discovery ids
  std::unordered_map<std::string, int> seen;
  std::deque<int> queue;

  Ornamentation top = Ornamentation::maximum(tree);
  seen.emplace(canonical_key(top), 0);
  elements.push_back(std::move(top));
  queue.push_back(0);

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (Ornamentation& below : covers_below(elements[cur])) {
      std::string key = canonical_key(below);
      auto [it, inserted] = seen.emplace(key, static_cast<int>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap) {
          throw ResourceError("lattice of tree " + tree->render() +
                              " exceeds the element cap");
        }
        elements.push_back(std::move(below));
        queue.push_back(it->second);
      }
      edges.emplace_back(it->second, cur);
    }
  }

  // canonical element order, independent of BFS schedule
  std::vector<int> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_key(elements[a]) < canonical_key(elements[b]);
  });
  std::vector<int> rank(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  LatticeGraph lattice;
  lattice.tree = std::move(tree);
  lattice.elements.reserve(elements.size());
  for (int old : order) lattice.elements.push_back(std::move(elements[old]));
  for (auto& [lo, hi] : edges) lattice.hasse.emplace_back(rank[lo], rank[hi]);
  std::sort(lattice.hasse.begin(), lattice.hasse.end());
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    lattice.index.emplace(canonical_key(lattice.elements[i]), static_cast<int>(i));
  }
  lattice.minimum = lattice.find(Ornamentation::minimum(lattice.tree));
  lattice.maximum = lattice.find(Ornamentation::maximum(lattice.tree));
  if (lattice.minimum < 0 || lattice.maximum < 0) {
    throw IntegrityError("lattice enumeration lost an extremal element");
  }
  return lattice;
}

Ornamentation join_in_lattice(const LatticeGraph& lattice, const Ornamentation& a,
                              const Ornamentation& b) {
  if (lattice.find(a) < 0 || lattice.find(b) < 0) {
    throw DomainError("operand is not an element of the enumerated lattice");
  }
  std::vector<int> uppers;
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    const Ornamentation& z = lattice.elements[i];
    if (leq(a, z) && leq(b, z)) uppers.push_back(static_cast<int>(i));
  }
  std::vector<int> minimal;
  for (int i : uppers) {
    bool is_minimal = true;
    for (int j : uppers) {
      if (j != i && leq(lattice.elements[j], lattice.elements[i])) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(i);
  }
  if (minimal.size() != 1) {
    throw IntegrityError("common upper bounds have no unique minimum");
  }
  return lattice.elements[minimal[0]];
}

namespace {

// The constructive minimum of Delta(x) \ Delta(x_u^v): singletons except
// for the path ornament [u, v] at v.
Ornamentation lower_witness(const TreePtr& tree, NodeId v, NodeId u) {
  std::vector<NodeId> path;
  for (NodeId w = u;; w = tree->parent(w)) {
    path.push_back(w);
    if (w == v) break;
  }
  std::sort(path.begin(), path.end());
  return Ornamentation::minimum(tree).with_ornament(v, std::move(path));
}

// The constructive maximum of Nabla(x_u^v) \ Nabla(x): full ornaments with
// Delta(u) carved out strictly between u and v.
Ornamentation upper_witness(const TreePtr& tree, NodeId v, NodeId u) {
  std::vector<std::vector<NodeId>> sets(tree->size());
  for (NodeId w = 0; w < tree->size(); ++w) {
    if (w != u && tree->in_subtree(u, w) && tree->in_subtree(w, v)) {
      std::vector<NodeId> set;
      for (NodeId x : tree->descendants(w)) {
        if (!tree->in_subtree(x, u)) set.push_back(x);
      }
      sets[w] = std::move(set);
    } else {
      sets[w] = tree->descendants(w);
    }
  }
  return Ornamentation(tree, std::move(sets));
}

}  // namespace

SemidistributivityReport check_semidistributive(const LatticeGraph& lattice) {
  auto fail = [](std::string detail) {
    return SemidistributivityReport{false, std::move(detail)};
  };

  for (auto [lo, hi] : lattice.hasse) {
    const Ornamentation& x = lattice.elements[hi];
    const Ornamentation& xlow = lattice.elements[lo];

    // identify the (v, u) reduction producing this cover
    NodeId cv = -1, cu = -1;
    for (const CoverStep& step : covers_below_labeled(x)) {
      if (step.result == xlow) {
        cv = step.v;
        cu = step.u;
        break;
      }
    }
    if (cv < 0) {
      throw IntegrityError("hasse edge is not a cover");
    }

    std::ostringstream where;
    where << "cover " << lo << " < " << hi << " of tree " << lattice.tree->render();

    // Barnard: Delta(x) \ Delta(x') needs a minimum
    std::vector<int> down;
    for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
      const Ornamentation& z = lattice.elements[i];
      if (leq(z, x) && !leq(z, xlow)) down.push_back(static_cast<int>(i));
    }
    int down_min = -1;
    for (int i : down) {
      bool is_min = true;
      for (int j : down) {
        if (!leq(lattice.elements[i], lattice.elements[j])) {
          is_min = false;
          break;
        }
      }
      if (is_min) down_min = i;
    }
    if (down_min < 0) return fail("no minimum below: " + where.str());

    // ... and Nabla(x') \ Nabla(x) needs a maximum
    std::vector<int> up;
    for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
      const Ornamentation& z = lattice.elements[i];
      if (leq(xlow, z) && !leq(x, z)) up.push_back(static_cast<int>(i));
    }
    int up_max = -1;
    for (int i : up) {
      bool is_max = true;
      for (int j : up) {
        if (!leq(lattice.elements[j], lattice.elements[i])) {
          is_max = false;
          break;
        }
      }
      if (is_max) up_max = i;
    }
    if (up_max < 0) return fail("no maximum above: " + where.str());

    if (!(lower_witness(lattice.tree, cv, cu) == lattice.elements[down_min])) {
      return fail("constructive lower witness disagrees: " + where.str());
    }
    if (!(upper_witness(lattice.tree, cv, cu) == lattice.elements[up_max])) {
      return fail("constructive upper witness disagrees: " + where.str());
    }
  }
  return SemidistributivityReport{};
}

std::vector<Ornamentation> brute_popk_image(const LatticeGraph& lattice, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  std::map<std::string, Ornamentation> image;
  for (const Ornamentation& d : lattice.elements) {
    Ornamentation cur = d;
    for (int i = 0; i < k; ++i) cur = pop(cur);
    image.emplace(canonical_key(cur), cur);
  }
  std::vector<Ornamentation> out;
  out.reserve(image.size());
  for (auto& [key, d] : image) out.push_back(std::move(d));
  return out;
}

int brute_max_orbit(const LatticeGraph& lattice) {
  int best = 0;
  for (const Ornamentation& d : lattice.elements) {
    best = std::max(best, static_cast<int>(forward_orbit(d).size()));
  }
  return best;
}

std::optional<Counterexample> search_popk_counterexample(int max_nodes, int k,
                                                        bool chains_only) {
  if (max_nodes > kDefaultTreeSizeCap) {
    throw ResourceError("counterexample search capped at " +
                        std::to_string(kDefaultTreeSizeCap) + " nodes");
  }
  if (k < 2) throw DomainError("counterexample search requires k >= 2");
  for (int n = 1; n <= max_nodes; ++n) {
    for (RootedPlaneTree& t : enumerate_plane_trees(n)) {
      if (chains_only && !t.is_chain()) continue;
      TreePtr tree = std::make_shared<const RootedPlaneTree>(std::move(t));
      LatticeGraph lattice = enumerate_lattice(tree);
      std::unordered_map<std::string, bool> in_image;
      for (const Ornamentation& d : brute_popk_image(lattice, k)) {
        in_image.emplace(canonical_key(d), true);
      }
      for (const Ornamentation& d : lattice.elements) {
        if (in_image.count(canonical_key(d))) continue;
        if (popk_necessary(d, k).pass) {
          return Counterexample{tree, d};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string element_label(const LatticeGraph& lattice, const Ornamentation& d) {
  std::ostringstream out;
  if (lattice.tree->is_chain()) {
    GSequence g = to_g_sequence(d);
    out << '[';
    for (int i = 0; i < g.size(); ++i) {
      if (i) out << ',';
      out << g.g[i];
    }
    out << ']';
  } else {
    for (const auto& s : d.ornaments()) {
      out << '{';
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i];
      }
      out << '}';
    }
  }
  return out.str();
}

}  // namespace

void write_dot(const LatticeGraph& lattice, std::ostream& out) {
  out << "digraph ornamentation_lattice {\n";
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    out << "  n" << i << " [label=\"" << element_label(lattice, lattice.elements[i])
        << "\"];\n";
  }
  for (auto [lo, hi] : lattice.hasse) {
    out << "  n" << hi << " -> n" << lo << ";\n";
  }
  out << "}\n";
}

}  // namespace orna
