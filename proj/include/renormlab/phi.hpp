#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/rho.hpp"

namespace renormlab {

/// Φ : {(ξ,η) : ξ < η < n} → positive naturals.
class PhiInstance {
 public:
  /// phi[(i,j)] for every i < j < n; missing or zero entries throw DomainError.
  PhiInstance(std::size_t n, std::map<std::pair<std::size_t, std::size_t>, unsigned long> phi);

  std::size_t n() const { return n_; }
  unsigned long phi(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, unsigned long>& table() const { return phi_; }
  /// Ground {0,...,n-1}.
  const IndexSetPtr& ground() const { return ground_; }
  /// L labelled "i,j".
  const IndexSetPtr& pairs() const { return pairs_; }
  std::size_t pair_index(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, unsigned long> phi_;
  IndexSetPtr ground_;
  IndexSetPtr pairs_;
};

/// ξ_1 < ... < ξ_k with Φ(ξ_i, ξ_j) >= j for all i < j.
bool in_w(const PhiInstance& inst, const Subset& a);

/// W itself (every finite set is its own finite subset). Provenance phi.
SetFamily phi_family(const PhiInstance& inst, std::size_t cap = kDefaultFamilyCap);

/// π(1_A)(ξ,η) = 1/Φ(ξ,η) for ξ, η ∈ A. DomainError unless A ∈ W.
LatticeVector phi_pi(const PhiInstance& inst, const Subset& a);

/// ρ(A) = 0, 1, or 1 + ‖π(1_A)‖_Day, kept exactly as the squared Day part.
struct PhiRhoValue {
  enum class Kind { zero, one, general };
  Kind kind = Kind::zero;
  Rational day_sq;

  /// Exact value when the square root is rational.
  bool exact(Rational& out) const;
  double approx() const;
  friend bool operator<(const PhiRhoValue& a, const PhiRhoValue& b);
  friend bool operator==(const PhiRhoValue& a, const PhiRhoValue& b) {
    return a.kind == b.kind && a.day_sq == b.day_sq;
  }
};

PhiRhoValue phi_rho(const PhiInstance& inst, const Subset& a);

/// ρ on K_W through the order-preserving encoding 0, 1, 1 + ‖π‖²_Day (values in [0, 2]).
RhoFunction phi_rho_function(const PhiInstance& inst, std::size_t cap = kDefaultFamilyCap);

}  // namespace renormlab
