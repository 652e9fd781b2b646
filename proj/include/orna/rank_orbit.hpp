#pragma once

#include <climits>
#include <compare>
#include <string>
#include <vector>

#include "orna/ornamentation.hpp"
#include "orna/tree.hpp"

namespace orna {

/// Per-chain potentials: b counts off-chain descendants, f is the chain
/// potential computed by the leaf-to-root recursion. Both are indexed along
/// the chain (position 0 = root). The closed-form evaluation of f is
/// recomputed on construction and must agree with the recursion.
struct ChainProfile {
  Chain chain;
  std::vector<int> b;
  std::vector<int> f;
};

ChainProfile chain_profile(const RootedPlaneTree& tree, const Chain& chain);

/// A rank value in {-1} ∪ N ∪ {∞}; -1 marks nodes outside the subtree and
/// ∞ compares greater than every integer.
class Rank {
public:
  static Rank minus_one() { return Rank(-1); }
  static Rank infinity() { return Rank(INT_MAX); }
  static Rank finite(int v) { return Rank(v); }

  bool is_infinite() const { return raw_ == INT_MAX; }
  bool is_minus_one() const { return raw_ == -1; }
  int raw() const { return raw_; }

  auto operator<=>(const Rank&) const = default;
  bool at_least(int k) const { return is_infinite() || raw_ >= k; }

  std::string to_string() const {
    if (is_infinite()) return "inf";
    return std::to_string(raw_);
  }

private:
  explicit Rank(int raw) : raw_(raw) {}
  int raw_;
};

/// All v-ranks of a tree; chain profiles are computed once and shared.
class RankTable {
public:
  explicit RankTable(const RootedPlaneTree& tree);

  /// rk_v(u): -1 outside Delta(v), ∞ at v itself, otherwise the height of
  /// u in the extended tree T*_v.
  Rank rank(NodeId v, NodeId u) const;

private:
  const RootedPlaneTree& tree_;
  std::vector<ChainProfile> profiles_;
  std::vector<std::vector<int>> chain_pos_;  // per chain: node -> position or -1
};

Rank v_rank(const RootedPlaneTree& tree, NodeId v, NodeId u);

/// Maximum forward-orbit size of Pop on O(T). Evaluates all three closed
/// forms and fails with IntegrityError if they disagree.
int max_orbit_size(const RootedPlaneTree& tree);

/// The chain, potential, and node numbering underlying the extremal
/// ornamentation: C* maximizes |C| + f_C(root) (smallest leaf index on
/// ties), and the off-chain nodes follow in a fixed linear extension of
/// the bough order (deeper boughs first, ancestors first within a bough,
/// then by preorder index).
struct DaggerLayout {
  Chain cstar;                    // root to leaf
  int k = 0;                      // f_{C*}(root)
  std::vector<NodeId> numbering;  // v_0 .. v_{n-1}
};

DaggerLayout dagger_layout(const RootedPlaneTree& tree);

/// The ornamentation whose forward orbit attains max_orbit_size.
Ornamentation build_delta_dagger(TreePtr tree);

/// delta, Pop(delta), Pop^2(delta), ... ending with delta_min (included
/// exactly once).
std::vector<Ornamentation> forward_orbit(const Ornamentation& d);

}  // namespace orna
