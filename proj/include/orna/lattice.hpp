#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orna/image.hpp"
#include "orna/ornamentation.hpp"
#include "orna/tree.hpp"

namespace orna {

inline constexpr std::size_t kDefaultLatticeCap = 1'000'000;

/// A fully enumerated ornamentation lattice: every element, the cover
/// relation, and an index keyed by the canonical serialized form. Elements
/// are sorted by that form, so the layout is construction-order independent.
struct LatticeGraph {
  TreePtr tree;
  std::vector<Ornamentation> elements;
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) element indices
  std::unordered_map<std::string, int> index;
  int minimum = -1;
  int maximum = -1;

  int find(const Ornamentation& d) const;
};

/// Downward closure from delta_max via covers_below.
LatticeGraph enumerate_lattice(TreePtr tree, std::size_t cap = kDefaultLatticeCap);

/// Join computed over the enumerated lattice (the unique minimum of the
/// common upper bounds); no pointwise formula is available for it.
Ornamentation join_in_lattice(const LatticeGraph& lattice, const Ornamentation& a,
                              const Ornamentation& b);

struct SemidistributivityReport {
  bool ok = true;
  std::string detail;  // describes the first failing cover, if any
};

/// Barnard's cover-local criterion, cross-checked against the constructive
/// extremal witnesses (the path ornamentation below and the complemented
/// full ornamentation above).
SemidistributivityReport check_semidistributive(const LatticeGraph& lattice);

/// { Pop^k(delta) : delta in the lattice }, in canonical order.
std::vector<Ornamentation> brute_popk_image(const LatticeGraph& lattice, int k);

/// Maximum forward-orbit size over every element.
int brute_max_orbit(const LatticeGraph& lattice);

struct Counterexample {
  TreePtr tree;
  Ornamentation ornamentation;
};

/// First ornamentation (over trees of at most max_nodes nodes, canonical
/// order) that passes every Pop^k necessary condition yet lies outside the
/// brute-force Pop^k image.
std::optional<Counterexample> search_popk_counterexample(int max_nodes, int k,
                                                        bool chains_only = false);

/// DOT export; labels are g-sequences for chains, ornament lists otherwise.
/// Edges point from cover to covered.
void write_dot(const LatticeGraph& lattice, std::ostream& out);

}  // namespace orna
