#include "orna/rank_orbit.hpp"

#include <algorithm>

namespace orna {

ChainProfile chain_profile(const RootedPlaneTree& tree, const Chain& chain) {
  int len = static_cast<int>(chain.size());
  if (len == 0 || chain[0] != tree.root() || !tree.is_leaf(chain[len - 1])) {
    throw DomainError("not a maximal chain");
  }
  for (int i = 1; i < len; ++i) {
    if (tree.parent(chain[i]) != chain[i - 1]) throw DomainError("not a maximal chain");
  }

  ChainProfile p;
  p.chain = chain;
  p.b.assign(len, 0);
  p.f.assign(len, 0);
  for (int i = 0; i < len; ++i) {
    int height_in_chain = len - 1 - i;
    p.b[i] = tree.subtree_size(chain[i]) - height_in_chain - 1;
  }
  for (int i = len - 2; i >= 0; --i) {
    // the chain child of chain[i] sits at position i+1
    p.f[i] = (p.f[i + 1] + 1 <= p.b[i + 1]) ? p.f[i + 1] + 1 : p.f[i + 1];
  }

  // closed form: min over strict chain descendants u of
  // |Delta(u)| + 2 depth(u), minus |C| + depth(v) + 1
  for (int i = 0; i < len; ++i) {
    int expect;
    if (i == len - 1) {
      expect = 0;
    } else {
      int best = INT_MAX;
      for (int j = i + 1; j < len; ++j) {
        best = std::min(best, tree.subtree_size(chain[j]) + 2 * tree.depth(chain[j]));
      }
      expect = best - len - tree.depth(chain[i]) - 1;
    }
    if (expect != p.f[i]) {
      throw IntegrityError("chain potential recursion and closed form disagree at chain position " +
                           std::to_string(i));
    }
  }
  return p;
}

RankTable::RankTable(const RootedPlaneTree& tree) : tree_(tree) {
  for (const Chain& c : maximal_chains(tree)) {
    profiles_.push_back(chain_profile(tree, c));
    std::vector<int> pos(tree.size(), -1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) pos[c[i]] = i;
    chain_pos_.push_back(std::move(pos));
  }
}

Rank RankTable::rank(NodeId v, NodeId u) const {
  if (!tree_.valid(v) || !tree_.valid(u)) throw DomainError("invalid node id");
  if (!tree_.in_subtree(u, v)) return Rank::minus_one();
  if (u == v) return Rank::infinity();
  // height of u in T*_v: every maximal chain through u also passes v, and
  // gains f_C(v) extra nodes below its leaf
  int best = -1;
  for (std::size_t c = 0; c < profiles_.size(); ++c) {
    int pu = chain_pos_[c][u];
    if (pu < 0) continue;
    int pv = chain_pos_[c][v];
    int len = static_cast<int>(profiles_[c].chain.size());
    int height_in_chain = len - 1 - pu;
    best = std::max(best, height_in_chain + profiles_[c].f[pv]);
  }
  return Rank::finite(best);
}

Rank v_rank(const RootedPlaneTree& tree, NodeId v, NodeId u) {
  return RankTable(tree).rank(v, u);
}

int max_orbit_size(const RootedPlaneTree& tree) {
  if (tree.size() == 1) return 1;

  auto chains = maximal_chains(tree);

  // expression 1: max_C min_{v in C \ {root}} (|Delta(v)| + 2 depth(v) - 1)
  int expr1 = 0;
  for (const Chain& c : chains) {
    int inner = INT_MAX;
    for (std::size_t i = 1; i < c.size(); ++i) {
      inner = std::min(inner, tree.subtree_size(c[i]) + 2 * tree.depth(c[i]) - 1);
    }
    expr1 = std::max(expr1, inner);
  }

  // expression 2: max over root children of rk_root + 2
  RankTable ranks(tree);
  int expr2 = 0;
  for (NodeId u : tree.children(tree.root())) {
    expr2 = std::max(expr2, ranks.rank(tree.root(), u).raw() + 2);
  }

  // expression 3: max_C (|C| + f_C(root))
  int expr3 = 0;
  for (const Chain& c : chains) {
    ChainProfile p = chain_profile(tree, c);
    expr3 = std::max(expr3, static_cast<int>(c.size()) + p.f[0]);
  }

  if (expr1 != expr2 || expr2 != expr3) {
    throw IntegrityError("maximum-orbit expressions disagree: " + std::to_string(expr1) +
                         " / " + std::to_string(expr2) + " / " + std::to_string(expr3));
  }
  return expr1;
}

DaggerLayout dagger_layout(const RootedPlaneTree& tree) {
  DaggerLayout layout;
  auto chains = maximal_chains(tree);
  int best = -1;
  ChainProfile best_profile;
  for (const Chain& c : chains) {
    ChainProfile p = chain_profile(tree, c);
    int value = static_cast<int>(c.size()) + p.f[0];
    // ties broken by smallest leaf preorder index; chains come leaf-ordered
    if (value > best) {
      best = value;
      best_profile = std::move(p);
    }
  }
  layout.cstar = best_profile.chain;
  layout.k = best_profile.f[0];

  int clen = static_cast<int>(layout.cstar.size());
  std::vector<bool> on_chain(tree.size(), false);
  for (NodeId v : layout.cstar) on_chain[v] = true;

  struct OffNode {
    int bough;
    int depth;
    NodeId id;
  };
  std::vector<OffNode> off;
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (on_chain[u]) continue;
    int bough = 0;
    for (int i = 0; i < clen; ++i) {
      if (tree.in_subtree(u, layout.cstar[i])) bough = i;
    }
    off.push_back(OffNode{bough, tree.depth(u), u});
  }
  std::sort(off.begin(), off.end(), [](const OffNode& a, const OffNode& b) {
    if (a.bough != b.bough) return a.bough > b.bough;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id < b.id;
  });

  layout.numbering = layout.cstar;
  for (const OffNode& o : off) layout.numbering.push_back(o.id);
  return layout;
}

Ornamentation build_delta_dagger(TreePtr tree) {
  DaggerLayout layout = dagger_layout(*tree);
  int clen = static_cast<int>(layout.cstar.size());
  std::vector<std::vector<NodeId>> sets(tree->size());
  for (NodeId v = 0; v < tree->size(); ++v) sets[v] = {v};
  for (int i = 0; i <= layout.k; ++i) {
    std::vector<NodeId> set;
    for (int j = i; j <= clen + layout.k - 1 - i; ++j) set.push_back(layout.numbering[j]);
    std::sort(set.begin(), set.end());
    sets[layout.numbering[i]] = std::move(set);
  }
  return Ornamentation(std::move(tree), std::move(sets));
}

std::vector<Ornamentation> forward_orbit(const Ornamentation& d) {
  std::vector<Ornamentation> orbit{d};
  int cap = d.tree().size() * d.tree().size() + 16;
  for (int step = 0; step < cap; ++step) {
    Ornamentation next = pop(orbit.back());
    if (next == orbit.back()) return orbit;
    orbit.push_back(std::move(next));
  }
  throw IntegrityError("forward orbit exceeded its iteration cap");
}

}  // namespace orna
