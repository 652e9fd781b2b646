#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orna/tree.hpp"

namespace orna {

/// Report for a failed ornamentation axiom: names the first offending node
/// or pair (smallest indices first).
struct Violation {
  std::string message;
  std::vector<NodeId> nodes;
};

/// Checks the two ornamentation axioms on candidate per-node sets. Sets must
/// be sorted ascending. Throws DomainError if a set references an unknown
/// node; returns a Violation if an axiom fails, nullopt if all is well.
std::optional<Violation> find_violation(const RootedPlaneTree& tree,
                                        const std::vector<std::vector<NodeId>>& sets);

/// An element of the ornamentation lattice O(T): every node v carries an
/// ornament (a connected node set whose unique maximal element is v), and
/// any two ornaments are nested or disjoint. Immutable after construction;
/// construction validates both axioms.
class Ornamentation {
public:
  Ornamentation(TreePtr tree, std::vector<std::vector<NodeId>> ornaments);

  static Ornamentation minimum(TreePtr tree);
  static Ornamentation maximum(TreePtr tree);

  const RootedPlaneTree& tree() const { return *tree_; }
  const TreePtr& tree_ptr() const { return tree_; }

  /// delta(v), sorted ascending. Its top is v itself.
  const std::vector<NodeId>& ornament(NodeId v) const;
  const std::vector<std::vector<NodeId>>& ornaments() const { return orn_; }

  /// u in delta(v)?
  bool contains(NodeId v, NodeId u) const;
  bool is_singleton(NodeId v) const { return ornament(v).size() == 1; }

  /// Replaces the ornament at v; the result is re-validated.
  Ornamentation with_ornament(NodeId v, std::vector<NodeId> set) const;

  /// Equality is pointwise set equality (trees assumed compatible).
  bool operator==(const Ornamentation& other) const { return orn_ == other.orn_; }

private:
  TreePtr tree_;
  std::vector<std::vector<NodeId>> orn_;
};

/// Stable serialized form used as a dedup/index key during enumeration.
std::string canonical_key(const Ornamentation& d);

enum class Ordering { Less, Equal, Greater, Incomparable };

/// Pointwise-inclusion verdict for two elements of the same lattice.
Ordering compare(const Ornamentation& a, const Ornamentation& b);
bool leq(const Ornamentation& a, const Ornamentation& b);

/// Lattice meet: pointwise intersection.
Ornamentation meet(const Ornamentation& a, const Ornamentation& b);

/// Sum over v of |delta(v)|.
long long weight(const Ornamentation& d);

/// Nodes wrapped by v in delta: u with delta(u) inside delta(v) and nothing
/// strictly between. Sorted ascending. Their ornaments are the maximal
/// subornaments of delta(v).
std::vector<NodeId> wrapped_nodes(const Ornamentation& d, NodeId v);

/// Decomposition of the ornament delta(v).
struct Anatomy {
  std::vector<NodeId> wrapped;                        // ascending
  std::vector<std::vector<NodeId>> subornaments;      // delta(u) per wrapped u
  std::vector<NodeId> section_children;               // ch_{delta(v)}(v), plane order
  std::vector<std::vector<NodeId>> sections;          // Delta_{delta(v)}(u') per child
};

Anatomy anatomy(const Ornamentation& d, NodeId v);

/// Delta_{delta(v)}(u): descendants of u (including u) within delta(v).
std::vector<NodeId> ornament_descendants(const Ornamentation& d, NodeId v, NodeId u);

/// M_delta(v): the wrapped nodes whose reduction is minimal, i.e. the
/// <=_T-minimal wrapped nodes.
std::vector<NodeId> minimal_reduction_nodes(const Ornamentation& d, NodeId v);

/// The reduction delta_u^v: removes Delta_{delta(v)}(u) from delta(v).
/// Requires that v wraps u; the reduction need not be minimal.
Ornamentation reduce(const Ornamentation& d, NodeId v, NodeId u);

/// One cover step, tagged with the (v, u) pair that produced it.
struct CoverStep {
  NodeId v;
  NodeId u;
  Ornamentation result;
};

/// All elements covered by delta: { delta_u^v : u in M_delta(v) }, ordered
/// by (v, u).
std::vector<CoverStep> covers_below_labeled(const Ornamentation& d);
std::vector<Ornamentation> covers_below(const Ornamentation& d);

/// Pop(delta)(v) = intersection of the minimal reductions of delta(v)
/// (delta(v) itself when there are none).
Ornamentation pop(const Ornamentation& d);

/// Chain-specialized encoding of a Tamari element: g[i] (0-based storage,
/// 1-based values) is the largest 1-based index in delta(v_{i+1}), where
/// v_1 is the root and v_n the leaf.
struct GSequence {
  std::vector<int> g;

  int size() const { return static_cast<int>(g.size()); }
  bool operator==(const GSequence&) const = default;
};

/// Validates bounds and the nested-or-disjoint condition on a g-sequence.
std::optional<Violation> find_g_violation(const GSequence& g);

/// Conversions between the two chain encodings. to_g_sequence requires the
/// underlying tree to be a chain.
GSequence to_g_sequence(const Ornamentation& d);
Ornamentation from_g_sequence(TreePtr chain, const GSequence& g);
Ornamentation from_g_sequence(const GSequence& g);  // builds the chain itself

}  // namespace orna
