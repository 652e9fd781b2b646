#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orna/errors.hpp"

namespace orna {

/// Preorder position of a node within its tree; the root is always 0.
using NodeId = int;

/// An immutable rooted tree with ordered (plane) children. Nodes are
/// identified by preorder index, so a node's index is smaller than every
/// index in its subtree and sibling subtrees occupy consecutive blocks.
class RootedPlaneTree {
public:
  /// Parses a balanced-parenthesis string: one node per matched pair, the
  /// outermost pair is the root, nested pairs in textual order become
  /// children in plane order.
  static RootedPlaneTree parse(std::string_view text);

  /// Builds a tree from an explicit child structure (root first, preorder).
  static RootedPlaneTree from_children(std::vector<std::vector<NodeId>> children);

  int size() const { return static_cast<int>(parent_.size()); }
  NodeId root() const { return 0; }
  bool valid(NodeId v) const { return v >= 0 && v < size(); }

  /// Parent of v, or -1 for the root.
  NodeId parent(NodeId v) const { check(v); return parent_[v]; }
  const std::vector<NodeId>& children(NodeId v) const { check(v); return children_[v]; }
  bool is_leaf(NodeId v) const { check(v); return children_[v].empty(); }

  int depth(NodeId v) const { check(v); return depth_[v]; }
  int height(NodeId v) const { check(v); return height_[v]; }
  int subtree_size(NodeId v) const { check(v); return subtree_[v]; }

  /// True iff d lies in the subtree rooted at a (d <=_T a); reflexive.
  bool in_subtree(NodeId d, NodeId a) const {
    check(d);
    check(a);
    return d >= a && d < a + subtree_[a];
  }

  /// Delta_T(v): v together with all nodes below it, ascending.
  std::vector<NodeId> descendants(NodeId v) const;
  /// Nabla_T(v): v together with all nodes above it, ascending.
  std::vector<NodeId> ancestors(NodeId v) const;

  bool is_chain() const;

  /// Canonical parenthesis rendering; no whitespace.
  std::string render() const;

  bool operator==(const RootedPlaneTree& other) const {
    return parent_ == other.parent_ && children_ == other.children_;
  }

private:
  RootedPlaneTree() = default;
  void finish();  // derive depth/height/subtree tables
  void check(NodeId v) const {
    if (!valid(v)) throw DomainError("invalid node id " + std::to_string(v));
  }

  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<int> depth_;
  std::vector<int> height_;
  std::vector<int> subtree_;
};

using TreePtr = std::shared_ptr<const RootedPlaneTree>;

/// Convenience: parse and wrap in a shared handle.
TreePtr make_tree(std::string_view text);

/// A maximal chain, listed root to leaf.
using Chain = std::vector<NodeId>;

/// One chain per leaf, ordered by leaf preorder index.
std::vector<Chain> maximal_chains(const RootedPlaneTree& tree);

struct NodeStats {
  int depth = 0;
  int height = 0;
  int subtree_size = 0;
  std::vector<NodeId> descendants;  // sorted, includes the node
  std::vector<NodeId> ancestors;    // sorted, includes the node
};

NodeStats node_stats(const RootedPlaneTree& tree, NodeId v);

inline constexpr int kDefaultTreeSizeCap = 8;

/// All plane trees with n nodes, each exactly once, ordered by their
/// canonical parenthesis string. |result| = Catalan(n-1).
std::vector<RootedPlaneTree> enumerate_plane_trees(int n, int cap = kDefaultTreeSizeCap);

}  // namespace orna
