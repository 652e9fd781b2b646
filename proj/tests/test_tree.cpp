#include <doctest.h>

#include <algorithm>
#include <set>

#include "orna/tree.hpp"

#include "helpers.hpp"

using namespace orna;

TEST_CASE("parse chain of three") {
  RootedPlaneTree t = RootedPlaneTree::parse("((()))");
  CHECK(t.size() == 3);
  CHECK(t.parent(0) == -1);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(2) == 1);
  CHECK(t.is_chain());
}

TEST_CASE("parse two children of the root") {
  RootedPlaneTree t = RootedPlaneTree::parse("(()())");
  CHECK(t.size() == 3);
  CHECK(t.children(0) == std::vector<NodeId>{1, 2});
  CHECK(t.is_leaf(1));
  CHECK(t.is_leaf(2));
  CHECK_FALSE(t.is_chain());
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(RootedPlaneTree::parse(""), ParseError);
  CHECK_THROWS_AS(RootedPlaneTree::parse("()()"), ParseError);
  CHECK_THROWS_AS(RootedPlaneTree::parse("())"), ParseError);
  CHECK_THROWS_AS(RootedPlaneTree::parse("(x)"), ParseError);
  try {
    RootedPlaneTree::parse("((()");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("render round trip") {
  for (const char* text : {"()", "((()))", "(()())", "((())())", "(()(()))"}) {
    CHECK(RootedPlaneTree::parse(text).render() == text);
  }
}

TEST_CASE("node stats on a chain and a branching tree") {
  TreePtr c3 = test::chain(3);
  NodeStats root = node_stats(*c3, 0);
  CHECK(root.depth == 0);
  CHECK(root.height == 2);
  CHECK(root.subtree_size == 3);
  CHECK(root.descendants == std::vector<NodeId>{0, 1, 2});
  CHECK(root.ancestors == std::vector<NodeId>{0});

  NodeStats leaf = node_stats(*c3, 2);
  CHECK(leaf.depth == 2);
  CHECK(leaf.height == 0);
  CHECK(leaf.subtree_size == 1);
  CHECK(leaf.ancestors == std::vector<NodeId>{0, 1, 2});

  TreePtr y = make_tree("(()())");
  NodeStats mid = node_stats(*y, 1);
  CHECK(mid.depth == 1);
  CHECK(mid.height == 0);
  CHECK(mid.subtree_size == 1);
  CHECK(mid.ancestors == std::vector<NodeId>{0, 1});
}

TEST_CASE("in_subtree respects preorder blocks") {
  TreePtr t = make_tree("((())())");  // 0 -> {1 -> {2}, 3}
  CHECK(t->in_subtree(2, 1));
  CHECK(t->in_subtree(2, 0));
  CHECK_FALSE(t->in_subtree(3, 1));
  CHECK_FALSE(t->in_subtree(1, 2));
  CHECK(t->in_subtree(3, 3));
}

TEST_CASE("maximal chains, one per leaf in plane order") {
  CHECK(maximal_chains(*test::chain(3)) == std::vector<Chain>{{0, 1, 2}});
  CHECK(maximal_chains(*make_tree("((())())")) ==
        std::vector<Chain>{{0, 1, 2}, {0, 3}});
  CHECK(maximal_chains(*make_tree("(()()())")) ==
        std::vector<Chain>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("from_children matches parse") {
  RootedPlaneTree t = RootedPlaneTree::from_children({{1, 3}, {2}, {}, {}});
  CHECK(t == RootedPlaneTree::parse("((())())"));
}

TEST_CASE("enumerate_plane_trees hits the Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 8; ++n) {
    auto trees = enumerate_plane_trees(n);
    CHECK(static_cast<int>(trees.size()) == catalan[n - 1]);
    std::set<std::string> seen;
    for (const auto& t : trees) {
      CHECK(t.size() == n);
      std::string text = t.render();
      CHECK(seen.insert(text).second);
      CHECK(RootedPlaneTree::parse(text) == t);  // round trip
    }
  }
  CHECK_THROWS_AS(enumerate_plane_trees(9), ResourceError);
  CHECK_THROWS_AS(enumerate_plane_trees(0), DomainError);
}

TEST_CASE("depth plus height bounds and chain identity") {
  for (const TreePtr& t : test::trees_up_to(6)) {
    int h = t->height(0);
    for (NodeId v = 0; v < t->size(); ++v) {
      CHECK(t->depth(v) + t->height(v) <= h);
      if (t->is_chain()) CHECK(t->depth(v) + t->height(v) == h);
    }
  }
}

TEST_CASE("descendants and ancestors partition along chains") {
  for (const TreePtr& t : test::trees_up_to(6)) {
    for (NodeId v = 0; v < t->size(); ++v) {
      auto desc = t->descendants(v);
      CHECK(static_cast<int>(desc.size()) == t->subtree_size(v));
      CHECK(std::is_sorted(desc.begin(), desc.end()));
      for (NodeId u : desc) CHECK(t->in_subtree(u, v));
      auto anc = t->ancestors(v);
      CHECK(static_cast<int>(anc.size()) == t->depth(v) + 1);
      for (NodeId u : anc) CHECK(t->in_subtree(v, u));
    }
  }
}
