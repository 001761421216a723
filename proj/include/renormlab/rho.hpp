#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/subset.hpp"

namespace renormlab {

/// λ·1_A. The zero point is stored canonically as (0, ∅).
struct ConePoint {
  Rational scale;
  Subset subset;

  bool is_zero() const { return scale == 0; }
  Rational coordinate(std::size_t gamma) const { return subset.contains(gamma) ? scale : Rational(0); }

  friend bool operator==(const ConePoint& a, const ConePoint& b) { return a.scale == b.scale && a.subset == b.subset; }
  friend bool operator<(const ConePoint& a, const ConePoint& b);
};

struct ConePointHash {
  std::size_t operator()(const ConePoint& p) const;
};

ConePoint make_cone_point(Rational scale, Subset subset);
/// 1_A (the zero point when A = ∅).
ConePoint indicator_point(Subset subset);

/// min(λ,μ)·1_{A∩B}.
ConePoint meet(const ConePoint& x, const ConePoint& y);
Order compare(const ConePoint& x, const ConePoint& y);
/// Coordinates where the two points take different values.
Subset disagreement(const ConePoint& x, const ConePoint& y);
bool agree_on(const ConePoint& x, const ConePoint& y, const Subset& coordinates);
LatticeVector to_vector(const ConePoint& p, const IndexSetPtr& gamma);

/// A total map from a finite set of cone points to rationals in [0, range_max].
/// Points are held in canonical order; indices below refer to that order.
class RhoFunction {
 public:
  RhoFunction(IndexSetPtr gamma, std::vector<ConePoint> points, std::vector<Rational> values,
              Rational range_max = Rational(1));

  /// ρ(1_A) = value(A) for every member A.
  static RhoFunction on_family(const SetFamily& family, const std::function<Rational(const Subset&)>& value,
                               Rational range_max = Rational(1));

  const IndexSetPtr& gamma() const { return gamma_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ConePoint>& points() const { return points_; }
  const std::vector<Rational>& values() const { return values_; }
  const ConePoint& point(std::size_t i) const { return points_.at(i); }
  const Rational& value(std::size_t i) const { return values_.at(i); }
  const Rational& range_max() const { return range_max_; }

  std::optional<std::size_t> find(const ConePoint& p) const;
  /// Throws DomainError when p is outside the domain.
  std::size_t index_of(const ConePoint& p) const;
  const Rational& value_of(const ConePoint& p) const { return values_[index_of(p)]; }

  bool is_meet_closed() const;
  /// Every point is 1_A for some A.
  bool indicators_only() const;

 private:
  IndexSetPtr gamma_;
  std::vector<ConePoint> points_;
  std::vector<Rational> values_;
  Rational range_max_;
  std::unordered_map<ConePoint, std::size_t, ConePointHash> index_;
};

enum class ViolationKind { monotonicity, star, symmetric };

const char* to_string(ViolationKind k);

/// A re-checkable counterexample. For monotonicity and star: points = {y, x} with y < x
/// and ρ(y) >= ρ(x). For symmetric: points = {x, y}, x != y, d(x, y) = 0.
struct ViolationWitness {
  ViolationKind kind = ViolationKind::monotonicity;
  std::vector<ConePoint> points;
  std::vector<Rational> values;
  std::string detail;
};

/// Re-evaluates the witness against `rho`; true when the violation reproduces.
bool recheck_violation(const ViolationWitness& w, const RhoFunction& rho);

/// max{ρ(x), ρ(y)} − ρ(x ∧ y). Throws DomainError when x ∧ y is not in the domain.
Rational symmetric_d(const RhoFunction& rho, const ConePoint& x, const ConePoint& y);
Rational symmetric_d(const RhoFunction& rho, std::size_t x, std::size_t y);

struct MonotonicityReport {
  bool pass = true;
  std::optional<ViolationWitness> violation;
  std::size_t comparable_pairs = 0;
  /// Set when the domain is meet-closed and d(x,y) = 0 ⟹ x = y was re-checked directly.
  bool symmetric_axiom_checked = false;
};

/// Exhaustive: ρ(y) < ρ(x) for every y < x; first violation in canonical order.
MonotonicityReport check_strictly_increasing(const RhoFunction& rho);

/// Exhaustive check of d(x,y) = 0 ⟹ x = y, and d(x,y) = d(y,x) >= 0.
std::optional<ViolationWitness> check_symmetric_axiom(const RhoFunction& rho);

/// B(x, ε) = {y : ρ(y) <= ρ(x) and d(x, y) < ε}, as domain indices.
std::vector<std::size_t> ball(const RhoFunction& rho, const ConePoint& x, const Rational& eps);

/// (α, U) for a comparable pair y < x: U = {z : z agrees with y on `coordinates`},
/// region_sup = max ρ(z) over z <= x in U, and region_sup < α < ρ(x).
struct StarWitness {
  std::size_t lower = 0;
  std::size_t upper = 0;
  Subset coordinates;
  Rational region_sup;
  Rational alpha;
  /// "drop-coordinate": F = {γ}, γ the least element of A∖B, region_sup = ρ(1_{A∖{γ}}).
  /// "search": first cylinder in the fixed candidate order that works.
  std::string construction;
};

/// max ρ(z) over domain points z <= upper that agree with lower on `coordinates`.
Rational star_region_sup(const RhoFunction& rho, std::size_t lower, std::size_t upper, const Subset& coordinates);

/// Witness for one pair, or nullopt when no cylinder works (then ρ(lower) >= ρ(upper)).
std::optional<StarWitness> star_witness_for_pair(const RhoFunction& rho, std::size_t lower, std::size_t upper);

/// The drop-coordinate construction for indicator pairs 1_B < 1_A: γ = least of A∖B,
/// F = {γ}, region_sup = ρ(1_{A∖{γ}}), α the midpoint of region_sup and ρ(1_A).
/// Throws DomainError when 1_{A∖{γ}} is not in the domain.
StarWitness drop_coordinate_witness(const RhoFunction& rho, std::size_t lower, std::size_t upper);

/// True when the witness satisfies its own claims against `rho`.
bool verify_star_witness(const RhoFunction& rho, const StarWitness& w);

struct StarReport {
  bool pass = true;
  std::vector<StarWitness> witnesses;
  std::optional<ViolationWitness> violation;
  std::string note;
};

StarReport star_check(const RhoFunction& rho);

// ---------------------------------------------------------------------------
// Fragmentation

enum class FragmentMode { exhaustive, scheme };

const char* to_string(FragmentMode m);

inline constexpr std::size_t kExhaustiveFragmentLimit = 14;

struct FragmentEntry {
  /// Exhaustive mode: the examined subset E as a bitmask over domain indices.
  std::uint64_t subset_mask = 0;
  /// Scheme mode: position in the derivation sequence.
  std::size_t step = 0;
  /// Domain index of the chosen point x (ρ maximal on E, lowest index on ties).
  std::size_t chosen = 0;
  /// Coordinate set F of the agreement cylinder U.
  Subset coordinates;
  /// E ∩ U, ascending domain indices.
  std::vector<std::size_t> slice;
  /// max d over pairs in the slice.
  Rational diameter;
};

/// Evidence that every examined subset has a cylinder slice of d-diameter < 2ε.
/// On every cylinder U used, ρ > ρ(x) − ε holds on all of U ∩ K, not only on E.
struct FragmentationCertificate {
  FragmentMode mode = FragmentMode::scheme;
  Rational epsilon;
  RhoFunction rho;
  std::vector<FragmentEntry> entries;
};

struct FragmentResult {
  std::optional<FragmentationCertificate> certificate;
  std::optional<ViolationWitness> violation;
};

/// Exhaustive mode requires |K| <= limit (ResourceError otherwise). The domain must be
/// meet-closed (DomainError); a ρ that is not strictly increasing yields its violation.
FragmentResult fragment(const RhoFunction& rho, const Rational& eps, FragmentMode mode,
                        std::size_t exhaustive_limit = kExhaustiveFragmentLimit);

// ---------------------------------------------------------------------------
// Scaled cone

/// {k/8 : 0 <= k <= 16}.
std::vector<Rational> default_scale_grid();

/// r ↦ (1 + r/range_max)/2 on nonzero points; the zero point keeps 0.
RhoFunction renormalize_half(const RhoFunction& rho);

struct ScaledCone {
  std::vector<Rational> grid;
  /// ρ after renormalization into [½, 1] on nonzero points.
  RhoFunction base;
  /// σ(λ1_A) = λρ(1_A) on {λ1_A : λ ∈ grid, 1_A ∈ K}.
  RhoFunction sigma;
};

/// Throws DomainError unless ρ is an indicator-domain, meet-closed, strictly increasing
/// function and the grid contains 0, at least two positive values, lies in [0,2] and is
/// closed under pairwise min.
ScaledCone scale_cone(const RhoFunction& rho, std::vector<Rational> grid = default_scale_grid());

struct ScaleStarWitness {
  /// 'a': A = B, μ < λ. 'b': B ⊊ A, μ <= λ.
  char which = 'a';
  Rational beta;
  /// Case (a): V = {z : 0 < z_γ < coordinate_bound}.
  std::size_t coordinate = 0;
  Rational coordinate_bound;
  /// Case (b): V = {ν1_C : 1_C ∈ U, ν < scale_bound}, with (α, U) from `inner` on K.
  std::optional<StarWitness> inner;
  Rational scale_bound;
  bool verified = false;
  std::optional<ViolationWitness> violation;
};

/// Requires lower < upper in the cone order (DomainError otherwise).
ScaleStarWitness scale_star_witness(const ScaledCone& cone, const ConePoint& upper, const ConePoint& lower);

}  // namespace renormlab
