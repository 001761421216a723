#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "renormlab/families.hpp"
#include "renormlab/intervals.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/phi.hpp"
#include "renormlab/pseudotree.hpp"
#include "renormlab/rational.hpp"

namespace renormlab {

/// mt19937_64 with fixed reductions, so streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n). n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// In [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
  /// p/q with p ∈ [−max_num, max_num], q ∈ [1, max_den].
  Rational rational(long max_num = 8, long max_den = 8);

 private:
  std::mt19937_64 engine_;
};

/// Random rooted tree (or forest) on labels prefix0, prefix1, ...; node i > 0 picks a
/// parent among earlier nodes (forest: or none).
Poset random_tree(std::size_t nodes, Rng& rng, bool forest = false, const std::string& prefix = "t");

/// Random strict order: i < j added with probability num/den for i < j, then closed.
Poset random_poset(std::size_t nodes, Rng& rng, std::size_t num = 1, std::size_t den = 3);

/// Φ values uniform in [1, max_phi].
PhiInstance random_phi(std::size_t n, unsigned long max_phi, Rng& rng);

/// `trees` trees of about `nodes_per_tree` nodes. Each tree after the first may reuse
/// one node of its predecessor, so distinct trees share at most one node. Parts are
/// Mirsky levels, some split further into smaller antichains.
IntervalSystem random_interval_system(std::size_t trees, std::size_t nodes_per_tree, Rng& rng,
                                      IntervalReading reading = IntervalReading::chain);

/// Downward closure of `members` random subsets of an n-atom ground set (labels a0, a1, ...).
SetFamily random_adequate_family(std::size_t n, std::size_t members, Rng& rng);

/// Dense random rational vector; each coordinate zero with probability zero_num/zero_den.
LatticeVector random_vector(const IndexSetPtr& gamma, Rng& rng, std::size_t zero_num = 1, std::size_t zero_den = 4,
                            long max_num = 8, long max_den = 8);

}  // namespace renormlab
