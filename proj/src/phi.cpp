#include "renormlab/phi.hpp"

#include <cmath>
#include <functional>

#include "renormlab/errors.hpp"
#include "renormlab/norms.hpp"

namespace renormlab {

namespace {

IndexSetPtr pair_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) labels.push_back(std::to_string(i) + "," + std::to_string(j));
  }
  return IndexSet::make(std::move(labels));
}

}  // namespace

PhiInstance::PhiInstance(std::size_t n, std::map<std::pair<std::size_t, std::size_t>, unsigned long> phi)
    : n_(n), phi_(std::move(phi)), ground_(IndexSet::numbered(n)), pairs_(pair_labels(n)) {
  for (const auto& [key, v] : phi_) {
    if (key.first >= key.second || key.second >= n_) {
      throw DomainError("phi: key " + std::to_string(key.first) + "," + std::to_string(key.second) + " is not in L");
    }
    if (v == 0) throw DomainError("phi: values must be positive");
  }
  if (phi_.size() != n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2) throw DomainError("phi: not total on L");
}

unsigned long PhiInstance::phi(std::size_t i, std::size_t j) const {
  const auto it = phi_.find({i, j});
  if (it == phi_.end()) throw DomainError("phi: no value at " + std::to_string(i) + "," + std::to_string(j));
  return it->second;
}

std::size_t PhiInstance::pair_index(std::size_t i, std::size_t j) const {
  return pairs_->index_of(std::to_string(i) + "," + std::to_string(j));
}

bool in_w(const PhiInstance& inst, const Subset& a) {
  const auto e = a.elements();
  for (std::size_t j = 1; j < e.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      // positions are 1-based, so ξ_{j+1} sits at position j+1
      if (inst.phi(e[i], e[j]) < j + 1) return false;
    }
  }
  return true;
}

SetFamily phi_family(const PhiInstance& inst, std::size_t cap) {
  const std::size_t n = inst.n();
  std::vector<Subset> members{Subset(n)};
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t x = from; x < n; ++x) {
      const std::size_t pos = chosen.size() + 1;
      bool ok = true;
      for (std::size_t c : chosen) {
        if (inst.phi(c, x) < pos) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(x);
      if (members.size() >= cap) throw ResourceError("phi_family: more than " + std::to_string(cap) + " members");
      members.push_back(Subset::from_elements(n, chosen));
      grow(x + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  SetFamily w(inst.ground(), std::move(members), Provenance::phi);
  if (!w.is_downward_closed()) throw std::logic_error("phi_family: W is not downward closed");
  return w;
}

LatticeVector phi_pi(const PhiInstance& inst, const Subset& a) {
  if (a.universe() != inst.n() || !in_w(inst, a)) throw DomainError("phi_pi: set is not in W");
  const auto e = a.elements();
  std::vector<Rational> dense(inst.pairs()->size());
  for (std::size_t j = 1; j < e.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const unsigned long phi = inst.phi(e[i], e[j]);
      if (j + 1 > phi) throw std::logic_error("phi_pi: position bound j <= phi fails");
      dense[inst.pair_index(e[i], e[j])] = Rational(1, phi);
    }
  }
  for (auto& q : dense) q.canonicalize();
  return LatticeVector::from_dense(inst.pairs(), dense);
}

bool PhiRhoValue::exact(Rational& out) const {
  switch (kind) {
    case Kind::zero: out = 0; return true;
    case Kind::one: out = 1; return true;
    case Kind::general: {
      Rational r;
      if (!exact_sqrt(day_sq, r)) return false;
      out = 1 + r;
      return true;
    }
  }
  return false;
}

double PhiRhoValue::approx() const {
  switch (kind) {
    case Kind::zero: return 0.0;
    case Kind::one: return 1.0;
    case Kind::general: return 1.0 + std::sqrt(to_double(day_sq));
  }
  return 0.0;
}

bool operator<(const PhiRhoValue& a, const PhiRhoValue& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.day_sq < b.day_sq;
}

PhiRhoValue phi_rho(const PhiInstance& inst, const Subset& a) {
  const LatticeVector pi = phi_pi(inst, a);
  PhiRhoValue v;
  if (a.empty()) {
    v.kind = PhiRhoValue::Kind::zero;
  } else if (a.size() == 1) {
    v.kind = PhiRhoValue::Kind::one;
  } else {
    v.kind = PhiRhoValue::Kind::general;
    v.day_sq = day_norm_sq(pi);
  }
  return v;
}

RhoFunction phi_rho_function(const PhiInstance& inst, std::size_t cap) {
  const SetFamily w = phi_family(inst, cap);
  return RhoFunction::on_family(
      w,
      [&](const Subset& a) {
        const PhiRhoValue v = phi_rho(inst, a);
        if (v.kind == PhiRhoValue::Kind::zero) return Rational(0);
        if (v.kind == PhiRhoValue::Kind::one) return Rational(1);
        return Rational(1 + v.day_sq);
      },
      Rational(2));
}

}  // namespace renormlab
