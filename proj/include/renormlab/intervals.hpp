#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/pseudotree.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/rho.hpp"

namespace renormlab {

/// chain: totally ordered convex subsets (segments). vacuous: every convex subset.
enum class IntervalReading { chain, vacuous };

const char* to_string(IntervalReading r);

/// One tree T_a of the system: its node set inside the shared universe, the order
/// (a Poset over the whole universe, with no relations touching non-members) and
/// its antichain decomposition (A_{a,n}).
struct SystemTree {
  Subset nodes;
  Poset order;
  AntichainDecomposition parts;
};

class IntervalSystem {
 public:
  /// Validates each tree (pseudotree, relations inside its nodes, decomposition covering it)
  /// and condition (**): a set that is an interval of two distinct trees has at most one
  /// element. DomainError with the offending set otherwise.
  IntervalSystem(IndexSetPtr universe, std::vector<SystemTree> trees,
                 IntervalReading reading = IntervalReading::chain, std::size_t cap = kDefaultFamilyCap);

  const IndexSetPtr& universe() const { return universe_; }
  const std::vector<SystemTree>& trees() const { return trees_; }
  IntervalReading reading() const { return reading_; }

  /// Intervals of tree `a` (∅ included), canonical order.
  const std::vector<Subset>& intervals_of(std::size_t a) const { return per_tree_.at(a); }
  /// The unique tree having `s` as an interval, for |s| >= 2.
  std::optional<std::size_t> owner(const Subset& s) const;

 private:
  IndexSetPtr universe_;
  std::vector<SystemTree> trees_;
  IntervalReading reading_;
  std::vector<std::vector<Subset>> per_tree_;
};

/// Convex in the tree order: s ∈ I whenever r < s < t with r, t ∈ I.
bool is_convex(const Poset& order, const Subset& nodes, const Subset& s);

/// Ω as a family over the universe, deduplicated across trees. Provenance intervals.
SetFamily intervals_family(const IntervalSystem& s);

/// 0 on ∅, 1 on singletons, else 1 + Σ{2^{-n} : I ∩ A_{a_I,n} ≠ ∅}.
Rational reznichenko_rho(const IntervalSystem& s, const Subset& interval);

/// ρ on Ω, values in [0, 2].
RhoFunction reznichenko_rho_function(const IntervalSystem& s);

struct ReznichenkoWitness {
  Subset upper;  // I
  Subset lower;  // J
  std::size_t t = 0;
  /// Part index of t in the owning tree; 0 in the singleton case.
  std::size_t m = 0;
  Rational alpha;
  bool verified = false;
  std::optional<ViolationWitness> violation;
  /// The R ⊆ I with t ∉ R and ρ(R) >= α, when verification fails.
  std::optional<Subset> offending;
};

/// Requires J ⊊ I, both in Ω (DomainError otherwise). t is the least node of I∖J.
ReznichenkoWitness reznichenko_star_witness(const IntervalSystem& s, const Subset& upper, const Subset& lower);

}  // namespace renormlab
