#include "orna/tree.hpp"

#include <algorithm>
#include <functional>

namespace orna {

RootedPlaneTree RootedPlaneTree::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 0);
  RootedPlaneTree t;
  std::vector<NodeId> stack;
  bool done = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (done) throw ParseError("trailing characters after root", i);
    char c = text[i];
    if (c == '(') {
      NodeId id = static_cast<NodeId>(t.parent_.size());
      t.parent_.push_back(stack.empty() ? -1 : stack.back());
      t.children_.emplace_back();
      if (!stack.empty()) t.children_[stack.back()].push_back(id);
      stack.push_back(id);
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'", i);
      stack.pop_back();
      if (stack.empty()) done = true;
    } else {
      throw ParseError("unexpected character", i);
    }
  }
  if (!done) throw ParseError("unbalanced '('", text.size());
  t.finish();
  return t;
}

RootedPlaneTree RootedPlaneTree::from_children(std::vector<std::vector<NodeId>> children) {
  RootedPlaneTree t;
  int n = static_cast<int>(children.size());
  t.parent_.assign(n, -1);
  t.children_ = std::move(children);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId c : t.children_[v]) {
      if (c <= v || c >= n) throw DomainError("child list is not in preorder");
      t.parent_[c] = v;
    }
  }
  for (NodeId v = 1; v < n; ++v) {
    if (t.parent_[v] < 0) throw DomainError("node has no parent");
  }
  t.finish();
  return t;
}

void RootedPlaneTree::finish() {
  int n = size();
  depth_.assign(n, 0);
  height_.assign(n, 0);
  subtree_.assign(n, 1);
  for (NodeId v = 1; v < n; ++v) depth_[v] = depth_[parent_[v]] + 1;
  // preorder indices mean children follow parents, so a reverse sweep works
  for (NodeId v = n - 1; v >= 1; --v) {
    NodeId p = parent_[v];
    subtree_[p] += subtree_[v];
    height_[p] = std::max(height_[p], height_[v] + 1);
  }
}

std::vector<NodeId> RootedPlaneTree::descendants(NodeId v) const {
  check(v);
  std::vector<NodeId> out(subtree_[v]);
  for (int i = 0; i < subtree_[v]; ++i) out[i] = v + i;
  return out;
}

std::vector<NodeId> RootedPlaneTree::ancestors(NodeId v) const {
  check(v);
  std::vector<NodeId> out;
  for (NodeId w = v; w != -1; w = parent_[w]) out.push_back(w);
  std::reverse(out.begin(), out.end());
  return out;
}

bool RootedPlaneTree::is_chain() const {
  for (NodeId v = 0; v < size(); ++v) {
    if (children_[v].size() > 1) return false;
  }
  return true;
}

std::string RootedPlaneTree::render() const {
  std::string out;
  std::function<void(NodeId)> emit = [&](NodeId v) {
    out.push_back('(');
    for (NodeId c : children_[v]) emit(c);
    out.push_back(')');
  };
  emit(0);
  return out;
}

TreePtr make_tree(std::string_view text) {
  return std::make_shared<const RootedPlaneTree>(RootedPlaneTree::parse(text));
}

std::vector<Chain> maximal_chains(const RootedPlaneTree& tree) {
  std::vector<Chain> chains;
  for (NodeId v = 0; v < tree.size(); ++v) {
    if (tree.is_leaf(v)) chains.push_back(tree.ancestors(v));
  }
  return chains;
}

NodeStats node_stats(const RootedPlaneTree& tree, NodeId v) {
  NodeStats s;
  s.depth = tree.depth(v);
  s.height = tree.height(v);
  s.subtree_size = tree.subtree_size(v);
  s.descendants = tree.descendants(v);
  s.ancestors = tree.ancestors(v);
  return s;
}

namespace {

// All parenthesis strings of trees/forests with the given node count.
void build_strings(int n, std::vector<std::vector<std::string>>& trees,
                   std::vector<std::vector<std::string>>& forests) {
  trees.assign(n + 1, {});
  forests.assign(n + 1, {});
  forests[0] = {""};
  for (int m = 1; m <= n; ++m) {
    for (const std::string& f : forests[m - 1]) trees[m].push_back("(" + f + ")");
    for (int s = 1; s <= m; ++s) {
      for (const std::string& first : trees[s]) {
        for (const std::string& rest : forests[m - s]) {
          forests[m].push_back(first + rest);
        }
      }
    }
  }
}

}  // namespace

std::vector<RootedPlaneTree> enumerate_plane_trees(int n, int cap) {
  if (n < 1) throw DomainError("tree size must be at least 1");
  if (n > cap) {
    throw ResourceError("tree size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<std::vector<std::string>> trees, forests;
  build_strings(n, trees, forests);
  std::sort(trees[n].begin(), trees[n].end());
  std::vector<RootedPlaneTree> out;
  out.reserve(trees[n].size());
  for (const std::string& s : trees[n]) out.push_back(RootedPlaneTree::parse(s));
  return out;
}

}  // namespace orna
