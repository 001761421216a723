#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "renormlab/lattice.hpp"
#include "renormlab/subset.hpp"

namespace renormlab {

enum class Provenance { explicit_members, chains_of_pseudotree, intervals, phi, norm_membership };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

inline constexpr std::size_t kDefaultFamilyCap = std::size_t{1} << 20;

/// An explicit finite family of subsets of a ground IndexSet.
///
/// Members are deduplicated and sorted by (cardinality, lexicographic).
class SetFamily {
 public:
  SetFamily(IndexSetPtr ground, std::vector<Subset> members, Provenance provenance = Provenance::explicit_members);

  static SetFamily from_labels(IndexSetPtr ground, const std::vector<std::vector<std::string>>& members,
                               Provenance provenance = Provenance::explicit_members);
  /// {∅} together with every singleton.
  static SetFamily singletons(IndexSetPtr ground);
  /// Every subset of the ground set; throws ResourceError above `cap`.
  static SetFamily powerset(IndexSetPtr ground, std::size_t cap = kDefaultFamilyCap);

  const IndexSet& ground() const { return *ground_; }
  const IndexSetPtr& ground_ptr() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  Provenance provenance() const { return provenance_; }
  bool contains(const Subset& s) const;
  /// Position of `s` in members(), or size() if absent.
  std::size_t position(const Subset& s) const;

  bool is_downward_closed() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return *a.ground_ == *b.ground_ && a.members_ == b.members_;
  }

 private:
  IndexSetPtr ground_;
  std::vector<Subset> members_;
  Provenance provenance_;
};

struct AdequacyViolation {
  std::string rule;  // "singletons" or "downward-closed"
  Subset witness;
};

struct AdequacyReport {
  bool is_adequate = true;
  std::vector<AdequacyViolation> violations;
  /// Always set: the finite-determination rule holds vacuously on a finite ground set.
  std::string note;
};

AdequacyReport validate_adequate(const SetFamily& family);

/// Smallest superfamily containing every singleton that is closed under subsets.
SetFamily downward_close(const SetFamily& family, std::size_t cap = kDefaultFamilyCap);

/// The inclusion-maximal members. Requires a downward-closed family.
std::vector<Subset> maximal_members(const SetFamily& family);

/// Indicator 1_A of every member, in member order.
std::vector<LatticeVector> k_points(const SetFamily& family);

/// True when A ∩ B is a member for all members A, B.
bool is_intersection_closed(const SetFamily& family);

}  // namespace renormlab
