#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/norms.hpp"
#include "renormlab/rational.hpp"

namespace renormlab {

/// A flat segment: ‖x + y‖ = ‖x‖ + ‖y‖ with x, y not positively parallel.
/// Values are as returned by NormOracle::evaluate (squared for squared oracles).
/// For non-squared oracles x and y are scaled to the unit sphere, so the midpoint
/// has norm 1 and deficiency 1 − ‖(x+y)/2‖ = 0.
struct MidpointWitness {
  LatticeVector x;
  LatticeVector y;
  Rational value_x;
  Rational value_y;
  /// Value at (x + y)/2.
  Rational value_mid;
  bool squared = false;
  /// 1 − ‖(x+y)/2‖ for unit x, y (non-squared oracles); 0 marks the violation.
  Rational deficiency;
};

/// Exact: the stored triple still shows a flat segment under `norm`.
bool recheck_midpoint(const NormOracle& norm, const MidpointWitness& w);

/// Exact test of ‖x + y‖ = ‖x‖ + ‖y‖ (never takes a square root).
bool flat_segment(const NormOracle& norm, const LatticeVector& x, const LatticeVector& y);
bool positively_parallel(const LatticeVector& x, const LatticeVector& y);

struct ConvexityProbe {
  std::optional<MidpointWitness> witness;
  std::size_t samples = 0;
  /// min over samples of 1 − ‖x+y‖/(‖x‖+‖y‖), in floating point.
  double min_deficiency = 1.0;
  /// Set when the deterministic {−1,0,1}^dim scan ran (polyhedral oracles).
  bool deterministic_scan = false;
};

/// Seeded random rational pairs in dimension `dim` over `gamma`, then for polyhedral
/// oracles a deterministic scan over {−1,0,1}^dim pairs.
ConvexityProbe strict_convexity_probe(const NormOracle& norm, const IndexSetPtr& gamma, std::size_t budget,
                                      std::uint64_t seed);

/// 2‖x‖² + 2‖y‖² − ‖x+y‖², exact (ℓp throws DomainError).
Rational lur_defect(const NormOracle& norm, const LatticeVector& x, const LatticeVector& y);

struct LurRow {
  double delta = 0;
  /// max ‖x − y‖∞ over sampled near-unit pairs with defect < delta (0 when none).
  double max_distance = 0;
  std::size_t count = 0;
};

/// Pairs x, y = x + t·h with t = 10^{-k}, k = 0..max_exponent, plus fully random y;
/// both scaled to norm 1 up to double rounding, defect computed exactly.
std::vector<LurRow> lur_table(const NormOracle& norm, const IndexSetPtr& gamma, std::size_t base_points,
                              std::uint64_t seed, const std::vector<double>& deltas = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5,
                                                                                        1e-6, 1e-7, 1e-8});

bool table_monotone(const std::vector<LurRow>& rows);

/// |x| < |y| (pointwise, not equal) yet ‖x‖ >= ‖y‖.
struct LatticeWitness {
  LatticeVector x;
  LatticeVector y;
  Rational value_x;
  Rational value_y;
};

bool recheck_lattice(const NormOracle& norm, const LatticeWitness& w);

struct LatticeCheck {
  bool pass = true;
  std::optional<LatticeWitness> witness;
  std::size_t indicator_pairs = 0;
  std::size_t random_pairs = 0;
};

/// Exhaustive over indicator pairs 1_B < 1_A of `family`, then `random_pairs` seeded pairs.
LatticeCheck strictly_lattice_check(const NormOracle& norm, const SetFamily& family, std::size_t random_pairs,
                                    std::uint64_t seed);

struct SmoothnessReport {
  LatticeVector x;
  std::vector<LatticeVector> directions;
  std::vector<double> t_grid;
  /// quotients[d][k] at direction d and t_grid[k].
  std::vector<std::vector<double>> quotients;
  bool nonnegative = true;
  /// Some direction keeps its quotient above `flag_level` at the smallest t.
  bool non_smooth = false;
  /// max − min over directions of the quotient at the smallest t.
  double spread = 0;
};

inline constexpr double kQuotientTolerance = 1e-9;

/// (‖x+th‖ + ‖x−th‖ − 2‖x‖)/t over the grid, in floating point.
SmoothnessReport smoothness_probe(const NormOracle& norm, const LatticeVector& x,
                                  const std::vector<LatticeVector>& directions, const std::vector<double>& t_grid,
                                  double flag_level = 1e-3);

struct EquivalenceConstants {
  double low = 0;
  double high = 0;
  /// Exact bounds when both oracles are exact and unsquared.
  std::optional<Rational> low_exact;
  std::optional<Rational> high_exact;
  std::size_t samples = 0;
};

/// min and max of N2(x)/N1(x) over all nonempty indicators plus `samples` random vectors.
EquivalenceConstants equivalence_constants(const NormOracle& n1, const NormOracle& n2, const IndexSetPtr& gamma,
                                           std::size_t samples, std::uint64_t seed);

}  // namespace renormlab
