#include "orna/image.hpp"

#include <algorithm>

#include "orna/rank_orbit.hpp"

namespace orna {

ExtendedNode wrapper_of(const Ornamentation& d, NodeId u) {
  NodeId best = -1;
  std::size_t best_size = 0;
  for (NodeId w = 0; w < d.tree().size(); ++w) {
    if (w == u || !d.contains(w, u)) continue;
    if (best < 0 || d.ornament(w).size() < best_size) {
      best = w;
      best_size = d.ornament(w).size();
    }
  }
  return best < 0 ? ExtendedNode::omega() : ExtendedNode::real(best);
}

namespace {

bool wraps(const Ornamentation& d, ExtendedNode v, NodeId u) {
  if (v.is_omega) {
    for (NodeId w = 0; w < d.tree().size(); ++w) {
      if (w != u && d.contains(w, u)) return false;
    }
    return true;
  }
  if (v.id == u || !d.contains(v.id, u)) return false;
  for (NodeId w : d.ornament(v.id)) {
    if (w != v.id && w != u && d.contains(w, u)) return false;
  }
  return true;
}

// |Delta_{delta(v)}(x)| with delta(omega) read as the whole tree
std::size_t outer_section_size(const Ornamentation& d, ExtendedNode v, NodeId x) {
  if (v.is_omega) return static_cast<std::size_t>(d.tree().subtree_size(x));
  return ornament_descendants(d, v.id, x).size();
}

}  // namespace

bool hugs(const Ornamentation& d, ExtendedNode v, NodeId u) {
  if (d.is_singleton(u)) return false;
  if (!wraps(d, v, u)) return false;
  for (NodeId child : d.tree().children(u)) {
    if (!d.contains(u, child)) continue;
    std::size_t inner = ornament_descendants(d, u, child).size();
    if (inner == outer_section_size(d, v, child)) return true;
  }
  return false;
}

std::optional<HugWitness> find_hug(const Ornamentation& d) {
  for (NodeId u = 0; u < d.tree().size(); ++u) {
    ExtendedNode v = wrapper_of(d, u);
    if (hugs(d, v, u)) return HugWitness{v, u};
  }
  return std::nullopt;
}

bool in_pop_image(const Ornamentation& d) { return !find_hug(d).has_value(); }

Ornamentation pop_preimage(const Ornamentation& d) {
  if (auto hug = find_hug(d)) {
    throw DomainError("not in the Pop image: " + hug->hugger.to_string() + " hugs v" +
                      std::to_string(hug->hugged));
  }
  std::vector<std::vector<NodeId>> sets(d.tree().size());
  for (NodeId u = 0; u < d.tree().size(); ++u) {
    ExtendedNode v = wrapper_of(d, u);
    sets[u] = v.is_omega ? d.tree().descendants(u) : ornament_descendants(d, v.id, u);
  }
  Ornamentation preimage(d.tree_ptr(), std::move(sets));
  if (!(pop(preimage) == d)) {
    throw IntegrityError("pop_preimage round trip failed");
  }
  return preimage;
}

std::vector<NodeId> beads(const Ornamentation& d, NodeId v, NodeId section_child) {
  if (d.tree().parent(section_child) != v || !d.contains(v, section_child)) {
    throw DomainError("node " + std::to_string(section_child) +
                      " does not head a section of the ornament at " + std::to_string(v));
  }
  std::vector<NodeId> out;
  for (NodeId u : d.tree().descendants(section_child)) {
    if (d.contains(v, u) || !d.is_singleton(u)) continue;
    bool reachable = true;
    for (NodeId w = u; w != section_child; w = d.tree().parent(w)) {
      if (!d.contains(v, w) && !d.is_singleton(w)) {
        reachable = false;
        break;
      }
    }
    if (reachable) out.push_back(u);
  }
  return out;
}

std::string to_string(PopkCondition c) {
  switch (c) {
    case PopkCondition::Rank: return "rank";
    case PopkCondition::Hug: return "hug";
    case PopkCondition::Beads: return "beads";
    case PopkCondition::TamariI: return "tamari-i";
    case PopkCondition::TamariII: return "tamari-ii";
  }
  return "?";
}

PopkReport popk_necessary(const Ornamentation& d, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  PopkReport report;
  RankTable ranks(d.tree());
  for (NodeId v = 0; v < d.tree().size(); ++v) {
    for (NodeId u : d.ornament(v)) {
      if (u != v && !ranks.rank(v, u).at_least(k)) {
        report.failures.push_back({PopkCondition::Rank, {v, u}});
      }
    }
  }
  if (k >= 1) {
    if (auto hug = find_hug(d)) {
      report.failures.push_back({PopkCondition::Hug, {hug->hugged}});
    }
  }
  if (k >= 2) {
    for (NodeId v = 0; v < d.tree().size(); ++v) {
      for (NodeId child : d.tree().children(v)) {
        if (!d.contains(v, child)) continue;
        if (static_cast<int>(beads(d, v, child).size()) < k - 1) {
          report.failures.push_back({PopkCondition::Beads, {v, child}});
        }
      }
    }
  }
  report.pass = report.failures.empty();
  return report;
}

PopkReport popk_tamari_report(const GSequence& g, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (auto bad = find_g_violation(g)) {
    throw DomainError("invalid g-sequence: " + bad->message);
  }
  PopkReport report;
  int n = g.size();
  for (int i = 1; i <= n; ++i) {
    int gi = g.g[i - 1];
    if (gi == i) continue;  // singletons are unconstrained
    // (i) hugged: by omega when the ornament reaches the leaf, or by the
    // wrapper when it shares the same bottom node. Pop^0 is the identity,
    // so the hug constraint only applies for k >= 1.
    if (k >= 1) {
      bool hugged = (gi == n);
      for (int j = 1; j < i && !hugged; ++j) {
        if (g.g[j - 1] == gi) hugged = true;
      }
      if (hugged) report.failures.push_back({PopkCondition::TamariI, {i - 1}});
    }
    // (ii) at least k ornaments below, the top k-1 of them singletons
    if (n - gi < k) {
      report.failures.push_back({PopkCondition::TamariII, {i - 1}});
    } else {
      for (int j = gi + 1; j <= gi + k - 1; ++j) {
        if (g.g[j - 1] != j) {
          report.failures.push_back({PopkCondition::TamariII, {i - 1, j - 1}});
          break;
        }
      }
    }
  }
  report.pass = report.failures.empty();
  return report;
}

bool in_popk_image_tamari(const GSequence& g, int k) {
  return popk_tamari_report(g, k).pass;
}

GSequence tamari_popk_preimage(const GSequence& g, int k) {
  if (k < 1) throw DomainError("k must be positive");
  if (!in_popk_image_tamari(g, k)) {
    throw DomainError("g-sequence is not in the Pop^k image of the Tamari lattice");
  }
  int t = k - 1;
  GSequence ext;
  for (int i = 1; i <= g.size(); ++i) {
    int gi = g.g[i - 1];
    ext.g.push_back(gi == i ? i : gi + t);
  }
  // round trip: Pop^{k-1} recovers g, and the extension is itself a Pop image
  Ornamentation cur = from_g_sequence(ext);
  if (!in_pop_image(cur)) {
    throw IntegrityError("tamari_popk_preimage extension is not in the Pop image");
  }
  for (int step = 0; step < t; ++step) cur = pop(cur);
  if (!(to_g_sequence(cur) == g)) {
    throw IntegrityError("tamari_popk_preimage round trip failed");
  }
  return ext;
}

namespace {

std::vector<BigInt> popk_count_row(int n, int k) {
  std::vector<BigInt> a(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (i <= k + 1) {
      a[i] = 1;
    } else {
      BigInt sum = 0;
      for (int j = k; j <= i - 1; ++j) sum += a[j] * a[i - 1 - j];
      a[i] = sum;
    }
  }
  return a;
}

}  // namespace

BigInt count_popk_images(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("n and k must be nonnegative");
  return popk_count_row(n, k)[n];
}

std::vector<BigInt> gf_coefficients(int k, int N) {
  if (N < 0 || k < 0) throw DomainError("k and N must be nonnegative");
  std::vector<BigInt> f = popk_count_row(N, k);

  // Rationalizing the closed form gives x(1-x)F^2 - (1-x^{k+1})F + (1-x^{k+1}) = 0;
  // check it coefficient-wise through degree N.
  std::vector<BigInt> sq(N + 1, 0);
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; i + j <= N; ++j) sq[i + j] += f[i] * f[j];
  }
  for (int m = 0; m <= N; ++m) {
    BigInt coeff = 0;
    if (m >= 1) coeff += sq[m - 1];            // x F^2
    if (m >= 2) coeff -= sq[m - 2];            // -x^2 F^2
    coeff -= f[m];                             // -F
    if (m >= k + 1) coeff += f[m - k - 1];     // x^{k+1} F
    if (m == 0) coeff += 1;                    // +1
    if (m == k + 1) coeff -= 1;                // -x^{k+1}
    if (coeff != 0) {
      throw IntegrityError("generating-function identity check failed at degree " +
                           std::to_string(m));
    }
  }
  return f;
}

}  // namespace orna
