#include "orna/verify.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "orna/image.hpp"
#include "orna/lattice.hpp"
#include "orna/ornamentation.hpp"
#include "orna/rank_orbit.hpp"
#include "orna/tree.hpp"

namespace orna::verify {

namespace {

// A suite body reports the first failure through this collector and keeps
// going only while clean.
struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) {
      ok = false;
      detail = what;
    }
  }
  bool clean() const { return ok; }
};

void for_each_tree(int max_nodes, const std::function<void(TreePtr)>& fn) {
  for (int n = 1; n <= max_nodes; ++n) {
    for (RootedPlaneTree& t : enumerate_plane_trees(n)) {
      fn(std::make_shared<const RootedPlaneTree>(std::move(t)));
    }
  }
}

TreePtr make_chain(int n) {
  std::string text(n, '(');
  text.append(n, ')');
  return make_tree(text);
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

// --- criterion 1 -----------------------------------------------------------

SuiteResult suite_tamari_sizes(int max_nodes) {
  Check c;
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  int bound = pick(max_nodes, 7);
  for (int n = 1; n <= bound && c.clean(); ++n) {
    LatticeGraph lattice = enumerate_lattice(make_chain(n));
    long long got = static_cast<long long>(lattice.elements.size());
    if (got != catalan[n]) {
      c.fail("O(C_" + std::to_string(n) + ") has " + std::to_string(got) +
             " elements, expected " + std::to_string(catalan[n]));
    }
  }
  return {"tamari-sizes", "Tamari lattice sizes are Catalan for chains up to C_7",
          c.ok, c.detail};
}

// --- criterion 2 -----------------------------------------------------------

SuiteResult suite_max_orbit(int max_nodes) {
  Check c;
  for_each_tree(pick(max_nodes, 6), [&](TreePtr tree) {
    if (!c.clean()) return;
    int formula = max_orbit_size(*tree);  // also checks the three expressions
    int brute = brute_max_orbit(enumerate_lattice(tree));
    if (formula != brute) {
      c.fail("tree " + tree->render() + ": formula " + std::to_string(formula) +
             " vs brute " + std::to_string(brute));
    }
  });
  for (int n = 1; n <= 7 && c.clean(); ++n) {
    int got = max_orbit_size(*make_chain(n));
    if (got != n) {
      c.fail("C_" + std::to_string(n) + ": maximum orbit " + std::to_string(got) +
             ", expected " + std::to_string(n));
    }
  }
  return {"max-orbit",
          "closed-form maximum orbit size matches brute force; chains give n",
          c.ok, c.detail};
}

// --- criterion 3 -----------------------------------------------------------

SuiteResult suite_dagger(int max_nodes) {
  Check c;
  for_each_tree(pick(max_nodes, 6), [&](TreePtr tree) {
    if (!c.clean()) return;
    DaggerLayout layout = dagger_layout(*tree);
    Ornamentation dagger = build_delta_dagger(tree);
    auto orbit = forward_orbit(dagger);
    int expected = max_orbit_size(*tree);
    if (static_cast<int>(orbit.size()) != expected) {
      c.fail("tree " + tree->render() + ": dagger orbit " +
             std::to_string(orbit.size()) + ", expected " + std::to_string(expected));
      return;
    }
    int clen = static_cast<int>(layout.cstar.size());
    for (int p = 0; p < static_cast<int>(orbit.size()) && c.clean(); ++p) {
      for (NodeId v = 0; v < tree->size(); ++v) {
        std::vector<NodeId> expect{-1};
        int i = -1;
        for (int pos = 0; pos <= layout.k; ++pos) {
          if (layout.numbering[pos] == v) i = pos;
        }
        if (i < 0) {
          expect = {v};  // off-construction nodes stay singletons
        } else {
          expect = {layout.numbering[i]};
          for (int j = i + 1; j <= clen + layout.k - 1 - i - p; ++j) {
            expect.push_back(layout.numbering[j]);
          }
          std::sort(expect.begin(), expect.end());
        }
        if (orbit[p].ornament(v) != expect) {
          c.fail("tree " + tree->render() + ": Pop^" + std::to_string(p) +
                 "(dagger) disagrees with the closed form at node " + std::to_string(v));
          break;
        }
      }
    }
  });
  return {"dagger", "the extremal ornamentation attains the bound and follows its closed form",
          c.ok, c.detail};
}

// --- criterion 4 -----------------------------------------------------------

SuiteResult suite_pop_image(int max_nodes) {
  Check c;
  for_each_tree(pick(max_nodes, 6), [&](TreePtr tree) {
    if (!c.clean()) return;
    LatticeGraph lattice = enumerate_lattice(tree);
    std::set<std::string> image;
    for (const Ornamentation& d : brute_popk_image(lattice, 1)) {
      image.insert(canonical_key(d));
    }
    for (const Ornamentation& d : lattice.elements) {
      bool brute = image.count(canonical_key(d)) > 0;
      bool predicted = in_pop_image(d);
      if (brute != predicted) {
        c.fail("tree " + tree->render() + ": hug criterion disagrees with brute image");
        return;
      }
      if (predicted && !(pop(pop_preimage(d)) == d)) {
        c.fail("tree " + tree->render() + ": preimage round trip failed");
        return;
      }
    }
  });
  return {"pop-image", "hug-freeness matches the brute Pop image; preimages round-trip",
          c.ok, c.detail};
}

// --- criterion 5 -----------------------------------------------------------

SuiteResult suite_popk_necessary(int max_nodes) {
  Check c;
  for_each_tree(pick(max_nodes, 5), [&](TreePtr tree) {
    if (!c.clean()) return;
    LatticeGraph lattice = enumerate_lattice(tree);
    for (int k = 0; k <= 3; ++k) {
      for (const Ornamentation& d : brute_popk_image(lattice, k)) {
        PopkReport report = popk_necessary(d, k);
        if (!report.pass) {
          c.fail("tree " + tree->render() + ", k=" + std::to_string(k) +
                 ": image element fails condition " +
                 to_string(report.failures[0].condition));
          return;
        }
      }
    }
  });
  return {"popk-necessary", "rank, hug, and bead conditions hold on every brute Pop^k image",
          c.ok, c.detail};
}

// --- criterion 6 -----------------------------------------------------------

SuiteResult suite_tamari_popk(int max_nodes) {
  Check c;
  int bound = pick(max_nodes, 7);
  for (int n = 1; n <= bound && c.clean(); ++n) {
    LatticeGraph lattice = enumerate_lattice(make_chain(n));
    for (int k = 0; k <= 4 && c.clean(); ++k) {
      std::set<std::string> image;
      for (const Ornamentation& d : brute_popk_image(lattice, k)) {
        image.insert(canonical_key(d));
      }
      for (const Ornamentation& d : lattice.elements) {
        bool brute = image.count(canonical_key(d)) > 0;
        bool predicted = in_popk_image_tamari(to_g_sequence(d), k);
        if (brute != predicted) {
          c.fail("C_" + std::to_string(n) + ", k=" + std::to_string(k) +
                 ": characterization disagrees with brute membership");
          break;
        }
      }
    }
  }
  return {"tamari-popk", "the chain Pop^k characterization matches brute membership",
          c.ok, c.detail};
}

// --- criterion 7 -----------------------------------------------------------

SuiteResult suite_gf(int max_nodes) {
  Check c;
  const int N = 12;
  for (int k = 0; k <= 3 && c.clean(); ++k) {
    std::vector<BigInt> coeffs = gf_coefficients(k, N);
    for (int n = 0; n <= N; ++n) {
      if (coeffs[n] != count_popk_images(n, k)) {
        c.fail("k=" + std::to_string(k) + ", n=" + std::to_string(n) +
               ": series and recurrence disagree");
        break;
      }
    }
  }
  const long long catalan_row[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862,
                                   16796, 58786, 208012};
  const long long motzkin_row[] = {1, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798};
  if (c.clean()) {
    std::vector<BigInt> row0 = gf_coefficients(0, N);
    std::vector<BigInt> row1 = gf_coefficients(1, N);
    for (int n = 0; n <= N && c.clean(); ++n) {
      if (row0[n] != catalan_row[n]) c.fail("k=0 row deviates from Catalan at n=" + std::to_string(n));
      if (row1[n] != motzkin_row[n]) c.fail("k=1 row deviates from shifted Motzkin at n=" + std::to_string(n));
    }
  }
  // the index shift is pinned by brute enumeration
  int bound = pick(max_nodes, 7);
  for (int n = 1; n <= bound && c.clean(); ++n) {
    LatticeGraph lattice = enumerate_lattice(make_chain(n));
    for (int k = 0; k <= 3; ++k) {
      BigInt brute = brute_popk_image(lattice, k).size();
      if (brute != count_popk_images(n, k)) {
        c.fail("C_" + std::to_string(n) + ", k=" + std::to_string(k) +
               ": brute image size disagrees with the recurrence");
        break;
      }
    }
  }
  return {"gf", "generating-function rows match the recurrence, known sequences, and brute counts",
          c.ok, c.detail};
}

// --- criterion 8 -----------------------------------------------------------

SuiteResult suite_semidistributive(int max_nodes) {
  Check c;
  for_each_tree(pick(max_nodes, 6), [&](TreePtr tree) {
    if (!c.clean()) return;
    SemidistributivityReport report = check_semidistributive(enumerate_lattice(tree));
    if (!report.ok) c.fail(report.detail);
  });
  return {"semidistributive", "every lattice passes Barnard's criterion with constructive witnesses",
          c.ok, c.detail};
}

// --- criterion 9 -----------------------------------------------------------

SuiteResult suite_counterexample(int max_nodes) {
  Check c;
  int bound = pick(max_nodes, 6);
  auto witness = search_popk_counterexample(bound, 2);
  if (!witness) {
    c.fail("no ornamentation passes the necessary conditions while avoiding the Pop^2 image");
  }
  if (c.clean()) {
    auto chain_witness = search_popk_counterexample(std::min(bound + 1, kDefaultTreeSizeCap), 2,
                                                    /*chains_only=*/true);
    if (chain_witness) {
      c.fail("unexpected chain counterexample on " + chain_witness->tree->render());
    }
  }
  return {"counterexample", "the necessary conditions are not sufficient off chains, but are on chains",
          c.ok, c.detail};
}

// --- criterion 10 ----------------------------------------------------------

SuiteResult suite_cross_checks(int max_nodes) {
  Check c;
  // chain potential: recursion vs an independent closed-form evaluation
  for_each_tree(pick(max_nodes, 8), [&](TreePtr tree) {
    if (!c.clean()) return;
    for (const Chain& chain : maximal_chains(*tree)) {
      ChainProfile p = chain_profile(*tree, chain);
      int len = static_cast<int>(chain.size());
      for (int i = 0; i < len; ++i) {
        int oracle;
        if (i == len - 1) {
          oracle = 0;
        } else {
          int best = INT_MAX;
          for (int j = i + 1; j < len; ++j) {
            best = std::min(best, tree->subtree_size(chain[j]) + 2 * tree->depth(chain[j]));
          }
          oracle = best - len - tree->depth(chain[i]) - 1;
        }
        if (p.f[i] != oracle) {
          c.fail("tree " + tree->render() + ": chain potential mismatch");
          return;
        }
      }
    }
  });
  // Pop by formula vs meet of covers
  for_each_tree(std::min(pick(max_nodes, 5), 5), [&](TreePtr tree) {
    if (!c.clean()) return;
    for (const Ornamentation& d : enumerate_lattice(tree).elements) {
      Ornamentation folded = d;
      for (const Ornamentation& below : covers_below(d)) folded = meet(folded, below);
      if (!(pop(d) == folded)) {
        c.fail("tree " + tree->render() + ": Pop formula deviates from meet of covers");
        return;
      }
    }
  });
  return {"cross-checks", "chain-potential closed form and the two Pop routes agree",
          c.ok, c.detail};
}

using SuiteFn = SuiteResult (*)(int);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"tamari-sizes", suite_tamari_sizes},
      {"max-orbit", suite_max_orbit},
      {"dagger", suite_dagger},
      {"pop-image", suite_pop_image},
      {"popk-necessary", suite_popk_necessary},
      {"tamari-popk", suite_tamari_popk},
      {"gf", suite_gf},
      {"semidistributive", suite_semidistributive},
      {"counterexample", suite_counterexample},
      {"cross-checks", suite_cross_checks},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, int max_nodes) {
  for (const auto& [suite_name, fn] : suites()) {
    if (suite_name == name) return fn(max_nodes);
  }
  throw DomainError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(int max_nodes) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites()) out.push_back(fn(max_nodes));
  return out;
}

}  // namespace orna::verify
