#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/rational.hpp"

namespace renormlab {

enum class NormKind { l1, linf, lp, adequate, day, troyanski };

struct NormFlags {
  bool is_lattice = true;
  bool is_one_unconditional = true;
  bool is_polyhedral = false;
  /// evaluate() returns the square of the norm.
  bool value_is_squared = false;
  /// evaluate() is available (false only for float ℓp).
  bool is_exact = true;
};

/// How the residual sup enters the Troyanski sum.
///   sup_is_norm:   ‖x‖_n = sup(...), summand 2^{-n}‖x‖_n²  (default)
///   sup_is_square: ‖x‖_n² = sup(...), summand 2^{-n}·sup(...)
enum class ResidualReading { sup_is_norm, sup_is_square };

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 22;

struct TroyanskiOptions {
  ResidualReading reading = ResidualReading::sup_is_norm;
  std::size_t subset_cap = kDefaultSubsetCap;
};

/// A named, evaluable norm on ℝ^Γ.
class NormOracle {
 public:
  static NormOracle l1();
  static NormOracle linf();
  /// Float-valued ℓp, 1 < p < ∞. Declared tolerance 1e-12.
  static NormOracle lp(double p);
  static NormOracle adequate(SetFamily family);
  static NormOracle day();
  static NormOracle troyanski(const NormOracle& base, TroyanskiOptions options = {});

  NormKind kind() const;
  std::string name() const;
  NormFlags flags() const;

  /// Exact value (squared when flags().value_is_squared). Throws DomainError for ℓp.
  Rational evaluate(const LatticeVector& x) const;
  /// The norm itself as a double (square root taken for squared oracles).
  double evaluate_float(const LatticeVector& x) const;

  double exponent() const;
  /// Family of an adequate oracle and its maximal members.
  const SetFamily& family() const;
  const std::vector<Subset>& maximal() const;
  /// Base of a Troyanski oracle.
  const NormOracle& base() const;
  const TroyanskiOptions& troyanski_options() const;

 private:
  struct Model;
  explicit NormOracle(std::shared_ptr<const Model> model) : model_(std::move(model)) {}
  std::shared_ptr<const Model> model_;
};

/// sup over members A of ‖x↾A‖₁, attained on maximal members.
Rational adequate_norm(const SetFamily& family, const LatticeVector& x);
Rational adequate_norm(const std::vector<Subset>& maximal, const LatticeVector& x);

/// The coefficient vector of a functional in the coordinate functionals.
struct DualFunctional {
  LatticeVector coefficients;

  /// Σ_γ f_γ x_γ.
  Rational apply(const LatticeVector& x) const;
};

/// 1_A^*: x ↦ Σ_{γ∈A} x_γ.
DualFunctional indicator_functional(const IndexSetPtr& gamma, const Subset& subset);

/// Squared Day norm: Σ_k 4^{-k} x_(k)² over the decreasing rearrangement of |x|.
Rational day_norm_sq(const LatticeVector& x);

enum class ResidualMode { exhaustive, greedy };

/// max over A ⊆ supp(x), |A| <= n of base(x↾(Γ∖A)) + 2Σ_{γ∈A}|x_γ|.
/// `greedy` takes the n largest coordinates and is an approximation for general bases.
Rational residual_sum_norm(const NormOracle& base, const LatticeVector& x, std::size_t n,
                           ResidualMode mode = ResidualMode::exhaustive, std::size_t subset_cap = kDefaultSubsetCap);

/// ‖x‖_n for n = 0..|supp x| in one pass over subsets of the support.
std::vector<Rational> residual_sum_profile(const NormOracle& base, const LatticeVector& x,
                                           std::size_t subset_cap = kDefaultSubsetCap);

/// Squared Troyanski norm with the series tail in closed form:
///   Day² + Σ_{n=0}^{s} 2^{-n}‖x‖_n² + 2^{-s}‖x‖_s²,  s = |supp x|.
Rational troyanski_norm_sq(const NormOracle& base, const LatticeVector& x, const TroyanskiOptions& options = {});

/// Partial sum of the same series up to n = `last` inclusive (no closed-form tail).
Rational troyanski_series_partial(const NormOracle& base, const LatticeVector& x, std::size_t last,
                                  const TroyanskiOptions& options = {});

/// Values Σ_{γ∈A} x_γ over every member A, parallel to family.members().
std::vector<Rational> t_embed(const SetFamily& family, const LatticeVector& x);

/// max_A |Σ_{γ∈A} x_γ|.
Rational sup_abs(const std::vector<Rational>& values);

inline constexpr std::size_t kDefaultLpCap = 5'000'000;

/// Exact dual-norm evaluation with a primal/dual optimality certificate.
struct DualNormCertificate {
  Rational value;
  /// Optimal covering weights μ_A over `columns`: Σ_{A∋γ} μ_A >= |f_γ|.
  std::vector<Subset> columns;
  std::vector<Rational> cover;
  /// A point y >= 0 of the primal unit ball (on supp f) with Σ|f_γ| y_γ = value.
  LatticeVector packing;
};

/// Dual norm over an adequate family by exact vertex enumeration of the
/// covering LP and of its packing dual. Throws ResourceError past `cap` bases.
DualNormCertificate adequate_dual_norm(const SetFamily& family, const DualFunctional& f,
                                       std::size_t cap = kDefaultLpCap);

/// Exact dual norm for ℓ1, ℓ∞ and adequate oracles. Throws DomainError otherwise.
Rational dual_norm(const NormOracle& norm, const DualFunctional& f, std::size_t cap = kDefaultLpCap);
/// ℓq value for float ℓp oracles (and exact oracles converted).
double dual_norm_float(const NormOracle& norm, const DualFunctional& f);

/// 𝒜_n = {A ⊆ Γ : ‖1_A^*‖ <= n} for n = 1..n_max, with ‖·‖ the dual of `norm`.
/// Each result is checked downward-closed (DomainError otherwise).
/// Ground sets above `max_ground` atoms throw ResourceError.
std::vector<SetFamily> membership_families(const NormOracle& norm, const IndexSetPtr& ground, std::size_t n_max,
                                           std::size_t max_ground = 20);

}  // namespace renormlab
