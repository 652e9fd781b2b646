#include "orna/ornamentation.hpp"

#include <algorithm>
#include <sstream>

namespace orna {

namespace {

bool is_sorted_unique(const std::vector<NodeId>& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

bool set_contains(const std::vector<NodeId>& s, NodeId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool subset(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return false;
  }
  return true;
}

std::vector<NodeId> intersect(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<NodeId> difference(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<Violation> find_violation(const RootedPlaneTree& tree,
                                        const std::vector<std::vector<NodeId>>& sets) {
  int n = tree.size();
  if (static_cast<int>(sets.size()) != n) {
    throw DomainError("expected one ornament per node (" + std::to_string(n) +
                      "), got " + std::to_string(sets.size()));
  }
  for (NodeId v = 0; v < n; ++v) {
    const auto& s = sets[v];
    if (s.empty()) return Violation{"empty ornament", {v}};
    if (!is_sorted_unique(s)) return Violation{"ornament not sorted/unique", {v}};
    for (NodeId w : s) {
      if (w < 0 || w >= n) throw DomainError("ornament at node " + std::to_string(v) +
                                             " references unknown node " + std::to_string(w));
    }
    if (!set_contains(s, v)) return Violation{"ornament does not contain its node", {v}};
    for (NodeId w : s) {
      if (!tree.in_subtree(w, v)) {
        return Violation{"node is not maximal in its ornament", {v, w}};
      }
      if (w != v && !set_contains(s, tree.parent(w))) {
        return Violation{"ornament not connected", {v, w}};
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w = v + 1; w < n; ++w) {
      const auto& a = sets[v];
      const auto& b = sets[w];
      if (!disjoint(a, b) && !subset(a, b) && !subset(b, a)) {
        return Violation{"ornaments overlap without nesting", {v, w}};
      }
    }
  }
  return std::nullopt;
}

Ornamentation::Ornamentation(TreePtr tree, std::vector<std::vector<NodeId>> ornaments)
    : tree_(std::move(tree)), orn_(std::move(ornaments)) {
  if (!tree_) throw DomainError("null tree");
  if (auto bad = find_violation(*tree_, orn_)) {
    std::ostringstream msg;
    msg << "not an ornamentation: " << bad->message << " (nodes";
    for (NodeId v : bad->nodes) msg << ' ' << v;
    msg << ')';
    throw DomainError(msg.str());
  }
}

Ornamentation Ornamentation::minimum(TreePtr tree) {
  std::vector<std::vector<NodeId>> sets(tree->size());
  for (NodeId v = 0; v < tree->size(); ++v) sets[v] = {v};
  return Ornamentation(std::move(tree), std::move(sets));
}

Ornamentation Ornamentation::maximum(TreePtr tree) {
  std::vector<std::vector<NodeId>> sets(tree->size());
  for (NodeId v = 0; v < tree->size(); ++v) sets[v] = tree->descendants(v);
  return Ornamentation(std::move(tree), std::move(sets));
}

const std::vector<NodeId>& Ornamentation::ornament(NodeId v) const {
  if (v < 0 || v >= static_cast<int>(orn_.size())) {
    throw DomainError("invalid node id " + std::to_string(v));
  }
  return orn_[v];
}

bool Ornamentation::contains(NodeId v, NodeId u) const {
  return set_contains(ornament(v), u);
}

Ornamentation Ornamentation::with_ornament(NodeId v, std::vector<NodeId> set) const {
  auto sets = orn_;
  sets.at(v) = std::move(set);
  return Ornamentation(tree_, std::move(sets));
}

std::string canonical_key(const Ornamentation& d) {
  std::ostringstream out;
  for (const auto& s : d.ornaments()) {
    for (NodeId w : s) out << w << ',';
    out << ';';
  }
  return out.str();
}

static void require_same_tree(const Ornamentation& a, const Ornamentation& b) {
  if (a.tree_ptr() != b.tree_ptr() && !(a.tree() == b.tree())) {
    throw DomainError("ornamentations live on different trees");
  }
}

Ordering compare(const Ornamentation& a, const Ornamentation& b) {
  require_same_tree(a, b);
  bool ab = true, ba = true;
  for (NodeId v = 0; v < a.tree().size(); ++v) {
    if (!subset(a.ornament(v), b.ornament(v))) ab = false;
    if (!subset(b.ornament(v), a.ornament(v))) ba = false;
  }
  if (ab && ba) return Ordering::Equal;
  if (ab) return Ordering::Less;
  if (ba) return Ordering::Greater;
  return Ordering::Incomparable;
}

bool leq(const Ornamentation& a, const Ornamentation& b) {
  Ordering o = compare(a, b);
  return o == Ordering::Less || o == Ordering::Equal;
}

Ornamentation meet(const Ornamentation& a, const Ornamentation& b) {
  require_same_tree(a, b);
  std::vector<std::vector<NodeId>> sets(a.tree().size());
  for (NodeId v = 0; v < a.tree().size(); ++v) {
    sets[v] = intersect(a.ornament(v), b.ornament(v));
  }
  return Ornamentation(a.tree_ptr(), std::move(sets));
}

long long weight(const Ornamentation& d) {
  long long w = 0;
  for (const auto& s : d.ornaments()) w += static_cast<long long>(s.size());
  return w;
}

std::vector<NodeId> wrapped_nodes(const Ornamentation& d, NodeId v) {
  // u in delta(v)\{v} is wrapped iff no other node of delta(v)\{v} carries
  // an ornament containing u.
  std::vector<NodeId> out;
  const auto& set = d.ornament(v);
  for (NodeId u : set) {
    if (u == v) continue;
    bool wrapped = true;
    for (NodeId w : set) {
      if (w == v || w == u) continue;
      if (d.contains(w, u)) {
        wrapped = false;
        break;
      }
    }
    if (wrapped) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> ornament_descendants(const Ornamentation& d, NodeId v, NodeId u) {
  std::vector<NodeId> out;
  for (NodeId w : d.ornament(v)) {
    if (d.tree().in_subtree(w, u)) out.push_back(w);
  }
  return out;
}

Anatomy anatomy(const Ornamentation& d, NodeId v) {
  Anatomy a;
  a.wrapped = wrapped_nodes(d, v);
  for (NodeId u : a.wrapped) a.subornaments.push_back(d.ornament(u));
  for (NodeId c : d.tree().children(v)) {
    if (d.contains(v, c)) {
      a.section_children.push_back(c);
      a.sections.push_back(ornament_descendants(d, v, c));
    }
  }
  return a;
}

std::vector<NodeId> minimal_reduction_nodes(const Ornamentation& d, NodeId v) {
  std::vector<NodeId> wrapped = wrapped_nodes(d, v);
  std::vector<NodeId> out;
  for (NodeId u : wrapped) {
    bool minimal = true;
    for (NodeId w : wrapped) {
      if (w != u && d.tree().in_subtree(w, u)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(u);
  }
  return out;
}

Ornamentation reduce(const Ornamentation& d, NodeId v, NodeId u) {
  std::vector<NodeId> wrapped = wrapped_nodes(d, v);
  if (!set_contains(wrapped, u)) {
    throw DomainError("node " + std::to_string(v) + " does not wrap node " +
                      std::to_string(u));
  }
  return d.with_ornament(v, difference(d.ornament(v), ornament_descendants(d, v, u)));
}

std::vector<CoverStep> covers_below_labeled(const Ornamentation& d) {
  std::vector<CoverStep> out;
  for (NodeId v = 0; v < d.tree().size(); ++v) {
    for (NodeId u : minimal_reduction_nodes(d, v)) {
      out.push_back(CoverStep{v, u, reduce(d, v, u)});
    }
  }
  return out;
}

std::vector<Ornamentation> covers_below(const Ornamentation& d) {
  std::vector<Ornamentation> out;
  std::vector<std::string> seen;
  for (CoverStep& step : covers_below_labeled(d)) {
    std::string key = canonical_key(step.result);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(std::move(step.result));
    }
  }
  return out;
}

Ornamentation pop(const Ornamentation& d) {
  std::vector<std::vector<NodeId>> sets(d.tree().size());
  for (NodeId v = 0; v < d.tree().size(); ++v) {
    std::vector<NodeId> cur = d.ornament(v);
    for (NodeId u : minimal_reduction_nodes(d, v)) {
      cur = intersect(cur, difference(d.ornament(v), ornament_descendants(d, v, u)));
    }
    sets[v] = std::move(cur);
  }
  return Ornamentation(d.tree_ptr(), std::move(sets));
}

std::optional<Violation> find_g_violation(const GSequence& g) {
  int n = g.size();
  for (int i = 1; i <= n; ++i) {
    int gi = g.g[i - 1];
    if (gi < i || gi > n) return Violation{"g value out of range", {i - 1}};
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int gi = g.g[i - 1], gj = g.g[j - 1];
      if (gi < j) continue;      // disjoint
      if (gi >= gj) continue;    // nested
      return Violation{"g-sequence ornaments overlap without nesting", {i - 1, j - 1}};
    }
  }
  return std::nullopt;
}

GSequence to_g_sequence(const Ornamentation& d) {
  if (!d.tree().is_chain()) throw DomainError("g-sequence encoding requires a chain tree");
  GSequence g;
  for (NodeId v = 0; v < d.tree().size(); ++v) {
    g.g.push_back(d.ornament(v).back() + 1);
  }
  return g;
}

Ornamentation from_g_sequence(TreePtr chain, const GSequence& g) {
  if (!chain->is_chain()) throw DomainError("g-sequence decoding requires a chain tree");
  if (chain->size() != g.size()) throw DomainError("g-sequence length mismatch");
  if (auto bad = find_g_violation(g)) {
    throw DomainError("invalid g-sequence: " + bad->message);
  }
  std::vector<std::vector<NodeId>> sets(g.size());
  for (int i = 0; i < g.size(); ++i) {
    for (int w = i; w < g.g[i]; ++w) sets[i].push_back(w);
  }
  return Ornamentation(std::move(chain), std::move(sets));
}

Ornamentation from_g_sequence(const GSequence& g) {
  std::string text;
  for (int i = 0; i < g.size(); ++i) text += '(';
  for (int i = 0; i < g.size(); ++i) text += ')';
  return from_g_sequence(make_tree(text), g);
}

}  // namespace orna
