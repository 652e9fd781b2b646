#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "orna/io.hpp"
#include "orna/lattice.hpp"
#include "orna/ornamentation.hpp"

#include "helpers.hpp"

using namespace orna;

TEST_CASE("lattice sizes") {
  CHECK(enumerate_lattice(test::chain(1)).elements.size() == 1);
  CHECK(enumerate_lattice(test::chain(3)).elements.size() == 5);
  CHECK(enumerate_lattice(test::chain(4)).elements.size() == 14);
  CHECK(enumerate_lattice(make_tree("(()())")).elements.size() == 4);
  CHECK(enumerate_lattice(make_tree("(()()())")).elements.size() == 8);
}

TEST_CASE("chain lattices are Tamari lattices (Catalan sizes)") {
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_lattice(test::chain(n)).elements.size() == catalan[n - 1]);
  }
}

TEST_CASE("lattice structure bookkeeping") {
  LatticeGraph lattice = enumerate_lattice(test::chain(3));
  CHECK(lattice.minimum >= 0);
  CHECK(lattice.maximum >= 0);
  CHECK(lattice.elements[lattice.minimum] == Ornamentation::minimum(lattice.tree));
  CHECK(lattice.elements[lattice.maximum] == Ornamentation::maximum(lattice.tree));
  CHECK(lattice.find(test::g({3, 2, 3})) >= 0);

  // one Hasse edge per labeled cover, summed over all elements
  std::size_t edge_count = 0;
  for (const Ornamentation& d : lattice.elements) {
    edge_count += covers_below(d).size();
  }
  CHECK(lattice.hasse.size() == edge_count);
  for (auto [lo, hi] : lattice.hasse) {
    CHECK(compare(lattice.elements[lo], lattice.elements[hi]) == Ordering::Less);
  }
}

TEST_CASE("join in the Tamari lattice of C_3") {
  LatticeGraph lattice = enumerate_lattice(test::chain(3));
  Ornamentation a = test::g({2, 2, 3});
  Ornamentation b = test::g({1, 3, 3});
  CHECK(to_g_sequence(join_in_lattice(lattice, a, b)).g == std::vector<int>{3, 3, 3});
  CHECK(join_in_lattice(lattice, a, a) == a);
  CHECK(join_in_lattice(lattice, a, Ornamentation::minimum(lattice.tree)) == a);

  Ornamentation alien = Ornamentation::minimum(test::chain(4));
  CHECK_THROWS_AS(join_in_lattice(lattice, a, alien), DomainError);
}

TEST_CASE("join is the least upper bound on small lattices") {
  for (const TreePtr& t : test::trees_up_to(4)) {
    LatticeGraph lattice = enumerate_lattice(t);
    for (const Ornamentation& a : lattice.elements) {
      for (const Ornamentation& b : lattice.elements) {
        Ornamentation j = join_in_lattice(lattice, a, b);
        CHECK(leq(a, j));
        CHECK(leq(b, j));
        for (const Ornamentation& c : lattice.elements) {
          if (leq(a, c) && leq(b, c)) CHECK(leq(j, c));
        }
      }
    }
  }
}

TEST_CASE("semidistributivity holds on all small lattices") {
  for (const TreePtr& t : test::trees_up_to(5)) {
    SemidistributivityReport r = check_semidistributive(enumerate_lattice(t));
    CHECK(r.ok);
    CHECK(r.detail.empty());
  }
}

TEST_CASE("brute-force Pop images on C_3") {
  LatticeGraph lattice = enumerate_lattice(test::chain(3));
  CHECK(brute_popk_image(lattice, 0).size() == 5);
  auto key_set = [](const std::vector<Ornamentation>& v) {
    std::set<std::string> out;
    for (const auto& d : v) out.insert(canonical_key(d));
    return out;
  };
  CHECK(key_set(brute_popk_image(lattice, 1)) ==
        key_set({test::g({1, 2, 3}), test::g({2, 2, 3})}));
  CHECK(key_set(brute_popk_image(lattice, 2)) == key_set({test::g({1, 2, 3})}));
}

TEST_CASE("brute-force maximum orbits") {
  CHECK(brute_max_orbit(enumerate_lattice(test::chain(3))) == 3);
  CHECK(brute_max_orbit(enumerate_lattice(make_tree("(()()())"))) == 2);
  CHECK(brute_max_orbit(enumerate_lattice(make_tree("((()()))"))) == 4);
}

TEST_CASE("counterexample search") {
  CHECK_FALSE(search_popk_counterexample(3, 2).has_value());
  CHECK_FALSE(search_popk_counterexample(6, 2, /*chains_only=*/true).has_value());
  CHECK_FALSE(search_popk_counterexample(7, 3, /*chains_only=*/true).has_value());
  CHECK_THROWS_AS(search_popk_counterexample(9, 2), ResourceError);
  CHECK_THROWS_AS(search_popk_counterexample(4, 1), DomainError);
}

TEST_CASE("dot export") {
  LatticeGraph lattice = enumerate_lattice(test::chain(3));
  std::ostringstream out;
  write_dot(lattice, out);
  std::string dot = out.str();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("[2,2,3]") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) {
    ++arrows;
  }
  CHECK(arrows == lattice.hasse.size());
}

TEST_CASE("json round trips") {
  for (const Ornamentation& d : {test::g({3, 2, 3}), Ornamentation::minimum(
                                                         make_tree("((())())"))}) {
    nlohmann::json j = ornamentation_to_json(d);
    Ornamentation back = ornamentation_from_json(j);
    CHECK(back == d);
    CHECK(back.tree() == d.tree());
  }
  nlohmann::json chain_form = ornamentation_to_json(test::g({3, 2, 3}));
  CHECK(chain_form.contains("g"));
  CHECK_THROWS_AS(ornamentation_from_json(nlohmann::json{{"tree", "((()"}}),
                  ParseError);
  CHECK_THROWS_AS(ornamentation_from_json(nlohmann::json{{"tree", "((()))"}}),
                  DomainError);
}

namespace {

// reverses the child order under every node and returns the relabeled tree
// together with the old-id -> new-id map
std::pair<TreePtr, std::vector<NodeId>> mirrored(const RootedPlaneTree& t) {
  std::vector<NodeId> map(t.size(), -1);
  std::string text;
  NodeId next = 0;
  std::function<void(NodeId)> emit = [&](NodeId v) {
    map[v] = next++;
    text.push_back('(');
    auto kids = t.children(v);
    std::for_each(kids.rbegin(), kids.rend(), emit);
    text.push_back(')');
  };
  emit(0);
  return {make_tree(text), std::move(map)};
}

}  // namespace

TEST_CASE("the lattice does not depend on the plane order") {
  for (const TreePtr& t : test::trees_up_to(5)) {
    auto [mirror, map] = mirrored(*t);
    LatticeGraph original = enumerate_lattice(t);
    LatticeGraph reflected = enumerate_lattice(mirror);
    REQUIRE(original.elements.size() == reflected.elements.size());

    std::map<int, int> renamed;  // original index -> reflected index
    for (std::size_t i = 0; i < original.elements.size(); ++i) {
      std::vector<std::vector<NodeId>> sets(t->size());
      for (NodeId v = 0; v < t->size(); ++v) {
        for (NodeId u : original.elements[i].ornament(v)) sets[map[v]].push_back(map[u]);
        std::sort(sets[map[v]].begin(), sets[map[v]].end());
      }
      int j = reflected.find(Ornamentation(mirror, std::move(sets)));
      REQUIRE(j >= 0);
      renamed[static_cast<int>(i)] = j;
    }

    std::set<std::pair<int, int>> a, b;
    for (auto [lo, hi] : original.hasse) a.insert({renamed[lo], renamed[hi]});
    for (auto [lo, hi] : reflected.hasse) b.insert({lo, hi});
    CHECK(a == b);
  }
}
