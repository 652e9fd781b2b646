#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "orna/ornamentation.hpp"
#include "orna/tree.hpp"

namespace orna {

using BigInt = boost::multiprecision::cpp_int;

/// A node of T extended by the imaginary node ω, the virtual parent of the
/// root whose ornament is the whole tree. ω never appears in serialized
/// ornamentations.
struct ExtendedNode {
  bool is_omega = false;
  NodeId id = -1;

  static ExtendedNode omega() { return ExtendedNode{true, -1}; }
  static ExtendedNode real(NodeId v) { return ExtendedNode{false, v}; }

  bool operator==(const ExtendedNode&) const = default;

  std::string to_string() const {
    return is_omega ? std::string("omega") : "v" + std::to_string(id);
  }
};

/// The unique node of T ∪ {ω} whose ornament minimally properly contains
/// delta(u).
ExtendedNode wrapper_of(const Ornamentation& d, NodeId u);

/// v hugs u: v wraps u and some section of delta(u) already fills the
/// corresponding section of delta(v). Singleton ornaments are never hugged.
bool hugs(const Ornamentation& d, ExtendedNode v, NodeId u);

struct HugWitness {
  ExtendedNode hugger;
  NodeId hugged = -1;
};

/// First hug in delta (by hugged node index), if any.
std::optional<HugWitness> find_hug(const Ornamentation& d);

/// Pop-image membership: delta is in Pop(O(T)) iff no node is hugged.
bool in_pop_image(const Ornamentation& d);

/// The explicit preimage delta* with Pop(delta*) = delta. Requires
/// membership; the round trip is checked internally.
Ornamentation pop_preimage(const Ornamentation& d);

/// Beads of the section of delta(v) headed by section_child: singleton
/// ornaments below the section reachable through in-ornament or singleton
/// nodes. Sorted ascending.
std::vector<NodeId> beads(const Ornamentation& d, NodeId v, NodeId section_child);

enum class PopkCondition { Rank, Hug, Beads, TamariI, TamariII };

std::string to_string(PopkCondition c);

struct PopkFailure {
  PopkCondition condition;
  std::vector<NodeId> witness;
};

struct PopkReport {
  bool pass = true;
  std::vector<PopkFailure> failures;
};

/// Necessary conditions for membership in Pop^k(O(T)): every node of every
/// ornament has rank >= k, no hugs when k >= 1, and every section carries
/// at least k-1 beads. Failing any condition proves non-membership; passing
/// all of them does not prove membership on general trees.
PopkReport popk_necessary(const Ornamentation& d, int k);

/// Complete Pop^k-image characterization on chains: every non-singleton
/// ornament is unhugged and has at least k ornaments below it, the top k-1
/// of which are singletons.
bool in_popk_image_tamari(const GSequence& g, int k);
PopkReport popk_tamari_report(const GSequence& g, int k);

/// The extension delta^(k-1) whose (k-1)-fold Pop recovers delta and which
/// itself lies in the Pop image. Requires in_popk_image_tamari(g, k) and
/// k >= 1; the round trip is checked internally.
GSequence tamari_popk_preimage(const GSequence& g, int k);

/// |Pop^k(O(C_n))| by the recurrence A_n = sum_{i=k}^{n-1} A_i A_{n-1-i}
/// with A_n = 1 for n <= k+1.
BigInt count_popk_images(int n, int k);

/// Coefficients x^0..x^N of the generating function of the counts above.
/// Served from the recurrence after an algebraic identity check against the
/// closed form.
std::vector<BigInt> gf_coefficients(int k, int N);

}  // namespace orna
