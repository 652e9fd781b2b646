#include <doctest.h>

#include <algorithm>

#include "orna/lattice.hpp"
#include "orna/rank_orbit.hpp"

#include "helpers.hpp"

using namespace orna;

TEST_CASE("chain potentials on a bare chain vanish") {
  TreePtr c4 = test::chain(4);
  ChainProfile p = chain_profile(*c4, {0, 1, 2, 3});
  CHECK(p.b == std::vector<int>{0, 0, 0, 0});
  CHECK(p.f == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("chain potentials with an off-chain leaf") {
  TreePtr t = make_tree("((()()))");  // 0 -> 1 -> {2, 3}
  ChainProfile p = chain_profile(*t, {0, 1, 2});
  CHECK(p.b == std::vector<int>{1, 1, 0});
  CHECK(p.f == std::vector<int>{1, 0, 0});
}

TEST_CASE("chain_profile rejects non-maximal chains") {
  TreePtr t = make_tree("((()()))");
  CHECK_THROWS_AS(chain_profile(*t, {0, 1}), DomainError);       // stops early
  CHECK_THROWS_AS(chain_profile(*t, {1, 2}), DomainError);       // misses the root
  CHECK_THROWS_AS(chain_profile(*t, {0, 2}), DomainError);       // skips a node
  CHECK_THROWS_AS(chain_profile(*t, {0, 1, 2, 3}), DomainError); // not a chain
}

TEST_CASE("v-ranks on C_3") {
  TreePtr c3 = test::chain(3);
  RankTable ranks(*c3);
  CHECK(ranks.rank(0, 0).is_infinite());
  CHECK(ranks.rank(0, 1).raw() == 1);
  CHECK(ranks.rank(0, 2).raw() == 0);
  CHECK(ranks.rank(1, 2).raw() == 0);
  CHECK(ranks.rank(1, 0).is_minus_one());
  CHECK(v_rank(*c3, 2, 1).is_minus_one());
}

TEST_CASE("v-ranks see off-chain slack") {
  TreePtr t = make_tree("((()()))");  // 0 -> 1 -> {2, 3}
  RankTable ranks(*t);
  // both chains through the leaves give f(root) = 1, lifting the leaf ranks
  CHECK(ranks.rank(0, 2).raw() == 1);
  CHECK(ranks.rank(0, 3).raw() == 1);
  CHECK(ranks.rank(0, 1).raw() == 2);
  CHECK(ranks.rank(1, 2).raw() == 0);
}

TEST_CASE("rank ordering and at_least") {
  CHECK(Rank::minus_one() < Rank::finite(0));
  CHECK(Rank::finite(3) < Rank::infinity());
  CHECK(Rank::infinity().at_least(1000000));
  CHECK_FALSE(Rank::minus_one().at_least(0));
  CHECK(Rank::finite(2).at_least(2));
}

TEST_CASE("maximum orbit sizes") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(max_orbit_size(*test::chain(n)) == n);
  }
  CHECK(max_orbit_size(*make_tree("(()()())")) == 2);
  CHECK(max_orbit_size(*make_tree("((()()))")) == 4);
  CHECK(max_orbit_size(*make_tree("((())())")) == 3);
}

TEST_CASE("formula matches brute force on all small trees") {
  for (const TreePtr& t : test::trees_up_to(5)) {
    CHECK(max_orbit_size(*t) == brute_max_orbit(enumerate_lattice(t)));
  }
}

TEST_CASE("dagger layout picks the best chain, earliest leaf on ties") {
  SUBCASE("chain") {
    DaggerLayout lay = dagger_layout(*test::chain(3));
    CHECK(lay.cstar == Chain{0, 1, 2});
    CHECK(lay.k == 0);
    CHECK(lay.numbering == std::vector<NodeId>{0, 1, 2});
  }
  SUBCASE("star breaks the tie toward the first leaf") {
    DaggerLayout lay = dagger_layout(*make_tree("(()()())"));
    CHECK(lay.cstar == Chain{0, 1});
    CHECK(lay.k == 0);
  }
  SUBCASE("off-chain nodes follow the chain") {
    DaggerLayout lay = dagger_layout(*make_tree("((()()))"));
    CHECK(lay.cstar == Chain{0, 1, 2});
    CHECK(lay.k == 1);
    CHECK(lay.numbering == std::vector<NodeId>{0, 1, 2, 3});
  }
}

TEST_CASE("delta dagger construction") {
  SUBCASE("chain gives the second-largest Tamari element") {
    CHECK(to_g_sequence(build_delta_dagger(test::chain(3))).g ==
          std::vector<int>{3, 2, 3});
    CHECK(to_g_sequence(build_delta_dagger(test::chain(4))).g ==
          std::vector<int>{4, 2, 3, 4});
  }
  SUBCASE("branching example") {
    Ornamentation d = build_delta_dagger(make_tree("((()()))"));
    CHECK(d.ornament(0) == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(d.ornament(1) == std::vector<NodeId>{1, 2});
    CHECK(d.ornament(2) == std::vector<NodeId>{2});
    CHECK(d.ornament(3) == std::vector<NodeId>{3});
  }
}

TEST_CASE("forward orbits") {
  auto orbit = forward_orbit(test::g({3, 2, 3}));
  REQUIRE(orbit.size() == 3);
  CHECK(to_g_sequence(orbit[0]).g == std::vector<int>{3, 2, 3});
  CHECK(to_g_sequence(orbit[1]).g == std::vector<int>{2, 2, 3});
  CHECK(to_g_sequence(orbit[2]).g == std::vector<int>{1, 2, 3});

  CHECK(forward_orbit(test::g({1, 2, 3})).size() == 1);
  CHECK(forward_orbit(test::g({3, 3, 3})).size() == 2);
}

TEST_CASE("the dagger orbit attains the maximum") {
  for (const TreePtr& t : test::trees_up_to(5)) {
    Ornamentation dagger = build_delta_dagger(t);
    CHECK(static_cast<int>(forward_orbit(dagger).size()) == max_orbit_size(*t));
  }
}

TEST_CASE("ranks grow toward the root") {
  // rk_v(u) <= rk_{v'}(u) whenever v' is the parent of v and u < v
  for (const TreePtr& t : test::trees_up_to(6)) {
    RankTable ranks(*t);
    for (NodeId v = 1; v < t->size(); ++v) {
      NodeId p = t->parent(v);
      for (NodeId u : t->descendants(v)) {
        if (u == v) continue;
        CHECK(ranks.rank(v, u) <= ranks.rank(p, u));
      }
    }
  }
}
