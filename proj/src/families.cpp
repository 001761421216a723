#include "renormlab/families.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "renormlab/errors.hpp"

namespace renormlab {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::explicit_members: return "explicit";
    case Provenance::chains_of_pseudotree: return "chains-of-pseudotree";
    case Provenance::intervals: return "intervals";
    case Provenance::phi: return "phi";
    case Provenance::norm_membership: return "norm-membership";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "explicit") return Provenance::explicit_members;
  if (s == "chains-of-pseudotree") return Provenance::chains_of_pseudotree;
  if (s == "intervals") return Provenance::intervals;
  if (s == "phi") return Provenance::phi;
  if (s == "norm-membership") return Provenance::norm_membership;
  throw ParseError("unknown family provenance '" + s + "'");
}

SetFamily::SetFamily(IndexSetPtr ground, std::vector<Subset> members, Provenance provenance)
    : ground_(std::move(ground)), members_(std::move(members)), provenance_(provenance) {
  if (!ground_) throw DomainError("SetFamily: null ground set");
  for (const auto& m : members_) {
    if (m.universe() != ground_->size()) throw DomainError("SetFamily: member over a different ground set");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_labels(IndexSetPtr ground, const std::vector<std::vector<std::string>>& members,
                                 Provenance provenance) {
  std::vector<Subset> subsets;
  subsets.reserve(members.size());
  for (const auto& m : members) subsets.push_back(ground->subset_of(m));
  return SetFamily(std::move(ground), std::move(subsets), provenance);
}

SetFamily SetFamily::singletons(IndexSetPtr ground) {
  const std::size_t n = ground->size();
  std::vector<Subset> members{Subset(n)};
  for (std::size_t i = 0; i < n; ++i) members.push_back(Subset(n, {i}));
  return SetFamily(std::move(ground), std::move(members));
}

SetFamily SetFamily::powerset(IndexSetPtr ground, std::size_t cap) {
  const std::size_t n = ground->size();
  if (n >= 63 || (std::uint64_t{1} << n) > cap) throw ResourceError("powerset: family cap exceeded");
  std::vector<Subset> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) members.push_back(Subset::from_mask(n, mask));
  return SetFamily(std::move(ground), std::move(members));
}

std::size_t SetFamily::position(const Subset& s) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return static_cast<std::size_t>(it - members_.begin());
  return members_.size();
}

bool SetFamily::contains(const Subset& s) const { return position(s) != members_.size(); }

bool SetFamily::is_downward_closed() const {
  for (const auto& m : members_) {
    for (std::size_t i = m.first(); i < m.universe(); i = m.next(i)) {
      Subset smaller = m;
      smaller.erase(i);
      if (!contains(smaller)) return false;
    }
  }
  return members_.empty() || contains(Subset(ground_->size()));
}

AdequacyReport validate_adequate(const SetFamily& family) {
  AdequacyReport report;
  const std::size_t n = family.ground().size();
  for (std::size_t i = 0; i < n; ++i) {
    Subset single(n, {i});
    if (!family.contains(single)) report.violations.push_back({"singletons", single});
  }
  std::set<Subset> reported;
  for (const auto& m : family.members()) {
    // One-element removals suffice: closure under them implies closure under all subsets.
    for (std::size_t i = m.first(); i < m.universe(); i = m.next(i)) {
      Subset smaller = m;
      smaller.erase(i);
      if (!family.contains(smaller) && reported.insert(smaller).second) {
        report.violations.push_back({"downward-closed", smaller});
      }
    }
  }
  report.is_adequate = report.violations.empty();
  report.note =
      "finite ground set: a set whose finite subsets are all members is itself one of them, "
      "so the finite-determination rule holds vacuously";
  return report;
}

SetFamily downward_close(const SetFamily& family, std::size_t cap) {
  const std::size_t n = family.ground().size();
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> frontier;
  auto add = [&](const Subset& s) {
    if (seen.insert(s).second) {
      if (seen.size() > cap) throw ResourceError("downward_close: family cap exceeded");
      frontier.push_back(s);
    }
  };
  add(Subset(n));
  for (std::size_t i = 0; i < n; ++i) add(Subset(n, {i}));
  for (const auto& m : family.members()) add(m);
  while (!frontier.empty()) {
    Subset s = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = s.first(); i < s.universe(); i = s.next(i)) {
      Subset smaller = s;
      smaller.erase(i);
      add(smaller);
    }
  }
  return SetFamily(family.ground_ptr(), std::vector<Subset>(seen.begin(), seen.end()), family.provenance());
}

std::vector<Subset> maximal_members(const SetFamily& family) {
  std::vector<Subset> out;
  const auto& members = family.members();
  // Members are sorted by cardinality, so anything that could contain m comes later.
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < members.size() && maximal; ++j) {
      if (members[j].size() > members[i].size() && members[i].is_subset_of(members[j])) maximal = false;
    }
    if (maximal) out.push_back(members[i]);
  }
  return out;
}

std::vector<LatticeVector> k_points(const SetFamily& family) {
  std::vector<LatticeVector> out;
  out.reserve(family.size());
  for (const auto& m : family.members()) out.push_back(LatticeVector::indicator(family.ground_ptr(), m));
  return out;
}

bool is_intersection_closed(const SetFamily& family) {
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] & members[j])) return false;
    }
  }
  return true;
}

}  // namespace renormlab
