#include "renormlab/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "combinatorics.hpp"
#include "renormlab/errors.hpp"

namespace renormlab {

struct NormOracle::Model {
  NormKind kind = NormKind::l1;
  double p = 1.0;
  std::optional<SetFamily> family;
  std::vector<Subset> maximal;
  std::optional<NormOracle> base;
  TroyanskiOptions options;
};

NormOracle NormOracle::l1() {
  auto m = std::make_shared<Model>();
  m->kind = NormKind::l1;
  return NormOracle(std::move(m));
}

NormOracle NormOracle::linf() {
  auto m = std::make_shared<Model>();
  m->kind = NormKind::linf;
  return NormOracle(std::move(m));
}

NormOracle NormOracle::lp(double p) {
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("lp: exponent must be finite and >= 1");
  auto m = std::make_shared<Model>();
  m->kind = NormKind::lp;
  m->p = p;
  return NormOracle(std::move(m));
}

NormOracle NormOracle::adequate(SetFamily family) {
  if (!family.is_downward_closed()) throw DomainError("adequate norm: family must be downward-closed");
  auto m = std::make_shared<Model>();
  m->kind = NormKind::adequate;
  m->maximal = maximal_members(family);
  m->family = std::move(family);
  return NormOracle(std::move(m));
}

NormOracle NormOracle::day() {
  auto m = std::make_shared<Model>();
  m->kind = NormKind::day;
  return NormOracle(std::move(m));
}

NormOracle NormOracle::troyanski(const NormOracle& base, TroyanskiOptions options) {
  const NormFlags bf = base.flags();
  if (!bf.is_exact || bf.value_is_squared || !bf.is_lattice) {
    throw DomainError("troyanski: base must be an exact, non-squared lattice norm");
  }
  auto m = std::make_shared<Model>();
  m->kind = NormKind::troyanski;
  m->base = base;
  m->options = options;
  return NormOracle(std::move(m));
}

NormKind NormOracle::kind() const { return model_->kind; }

std::string NormOracle::name() const {
  switch (model_->kind) {
    case NormKind::l1: return "l1";
    case NormKind::linf: return "linf";
    case NormKind::lp: return "l" + std::to_string(model_->p);
    case NormKind::adequate: return "adequate";
    case NormKind::day: return "day";
    case NormKind::troyanski: return "troyanski(" + model_->base->name() + ")";
  }
  return "?";
}

NormFlags NormOracle::flags() const {
  NormFlags f;
  switch (model_->kind) {
    case NormKind::l1:
    case NormKind::linf:
    case NormKind::adequate:
      f.is_polyhedral = true;
      break;
    case NormKind::lp:
      f.is_exact = false;
      break;
    case NormKind::day:
      f.value_is_squared = true;
      break;
    case NormKind::troyanski:
      f.value_is_squared = true;
      f.is_one_unconditional = model_->base->flags().is_one_unconditional;
      break;
  }
  return f;
}

double NormOracle::exponent() const { return model_->p; }

const SetFamily& NormOracle::family() const {
  if (!model_->family) throw DomainError("family(): not an adequate norm");
  return *model_->family;
}

const std::vector<Subset>& NormOracle::maximal() const {
  if (!model_->family) throw DomainError("maximal(): not an adequate norm");
  return model_->maximal;
}

const NormOracle& NormOracle::base() const {
  if (!model_->base) throw DomainError("base(): not a Troyanski norm");
  return *model_->base;
}

const TroyanskiOptions& NormOracle::troyanski_options() const { return model_->options; }

Rational NormOracle::evaluate(const LatticeVector& x) const {
  switch (model_->kind) {
    case NormKind::l1: {
      Rational s(0);
      for (const auto& e : x.entries()) s += abs(e.value);
      return s;
    }
    case NormKind::linf: {
      Rational s(0);
      for (const auto& e : x.entries()) s = std::max(s, abs(e.value));
      return s;
    }
    case NormKind::lp:
      throw DomainError("ℓp oracle is float-valued; use evaluate_float");
    case NormKind::adequate:
      require_same_ground(model_->family->ground_ptr(), x.gamma_ptr(), "adequate norm");
      return adequate_norm(model_->maximal, x);
    case NormKind::day:
      return day_norm_sq(x);
    case NormKind::troyanski:
      return troyanski_norm_sq(*model_->base, x, model_->options);
  }
  return Rational(0);
}

double NormOracle::evaluate_float(const LatticeVector& x) const {
  if (model_->kind == NormKind::lp) {
    double s = 0.0;
    for (const auto& e : x.entries()) s += std::pow(std::fabs(to_double(e.value)), model_->p);
    return std::pow(s, 1.0 / model_->p);
  }
  const double v = to_double(evaluate(x));
  return flags().value_is_squared ? std::sqrt(v) : v;
}

Rational adequate_norm(const std::vector<Subset>& maximal, const LatticeVector& x) {
  Rational best(0);
  for (const auto& a : maximal) {
    Rational s(0);
    for (const auto& e : x.entries()) {
      if (a.contains(e.index)) s += abs(e.value);
    }
    if (s > best) best = s;
  }
  return best;
}

Rational adequate_norm(const SetFamily& family, const LatticeVector& x) {
  require_same_ground(family.ground_ptr(), x.gamma_ptr(), "adequate_norm");
  if (!family.is_downward_closed()) throw DomainError("adequate_norm: family must be downward-closed");
  return adequate_norm(maximal_members(family), x);
}

Rational DualFunctional::apply(const LatticeVector& x) const {
  require_same_ground(coefficients.gamma_ptr(), x.gamma_ptr(), "functional action");
  Rational s(0);
  for (const auto& e : coefficients.entries()) s += e.value * x.at(e.index);
  return s;
}

DualFunctional indicator_functional(const IndexSetPtr& gamma, const Subset& subset) {
  return DualFunctional{LatticeVector::indicator(gamma, subset)};
}

Rational day_norm_sq(const LatticeVector& x) {
  std::vector<Rational> mags;
  mags.reserve(x.support_size());
  for (const auto& e : x.entries()) mags.push_back(abs(e.value));
  std::sort(mags.begin(), mags.end(), [](const Rational& a, const Rational& b) { return a > b; });
  Rational s(0);
  for (std::size_t k = 0; k < mags.size(); ++k) s += pow4_neg(static_cast<unsigned>(k + 1)) * mags[k] * mags[k];
  return s;
}

namespace {

void require_residual_base(const NormOracle& base) {
  const NormFlags f = base.flags();
  if (!f.is_exact || f.value_is_squared) throw DomainError("residual sums need an exact, non-squared base norm");
}

// base(x off A) + 2 Σ_A |x|, with A given as positions into x.entries().
Rational residual_value(const NormOracle& base, const LatticeVector& x, const std::vector<bool>& in_a) {
  std::vector<LatticeVector::Entry> rest;
  Rational doubled(0);
  const auto entries = x.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (in_a[i]) doubled += abs(entries[i].value);
    else rest.push_back(entries[i]);
  }
  return base.evaluate(LatticeVector(x.gamma_ptr(), std::move(rest))) + 2 * doubled;
}

// Table-driven variant for l1, linf and adequate bases: subset sums of |x| over
// support positions are tabulated once, then every mask is a few lookups.
bool residual_profile_fast(const NormOracle& base, const LatticeVector& x, std::vector<Rational>& best) {
  const NormKind kind = base.kind();
  const std::size_t s = x.support_size();
  if (s > 20 || (kind != NormKind::l1 && kind != NormKind::linf && kind != NormKind::adequate)) return false;
  const auto entries = x.entries();
  const std::uint64_t full = (std::uint64_t{1} << s) - 1;
  std::vector<Rational> sums(full + 1);
  std::vector<Rational> peak(kind == NormKind::linf ? full + 1 : 0);
  for (std::uint64_t m = 1; m <= full; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    const Rational mag = abs(entries[low].value);
    sums[m] = sums[m & (m - 1)] + mag;
    if (kind == NormKind::linf) peak[m] = std::max(peak[m & (m - 1)], mag);
  }
  std::vector<std::uint64_t> members;
  if (kind == NormKind::adequate) {
    for (const auto& mem : base.maximal()) {
      std::uint64_t mm = 0;
      for (std::size_t i = 0; i < s; ++i) {
        if (mem.contains(entries[i].index)) mm |= std::uint64_t{1} << i;
      }
      members.push_back(mm);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const std::uint64_t rest = full & ~mask;
    const Rational* off = &sums[rest];
    if (kind == NormKind::linf) off = &peak[rest];
    if (kind == NormKind::adequate) {
      off = &sums[0];
      for (std::uint64_t mm : members) {
        if (sums[mm & rest] > *off) off = &sums[mm & rest];
      }
    }
    const Rational v = *off + 2 * sums[mask];
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (v > best[count]) best[count] = v;
  }
  return true;
}

}  // namespace

Rational residual_sum_norm(const NormOracle& base, const LatticeVector& x, std::size_t n, ResidualMode mode,
                           std::size_t subset_cap) {
  require_residual_base(base);
  const std::size_t s = x.support_size();
  const std::size_t k_max = std::min(n, s);
  if (mode == ResidualMode::greedy) {
    std::vector<std::size_t> order(s);
    for (std::size_t i = 0; i < s; ++i) order[i] = i;
    const auto entries = x.entries();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return abs(entries[a].value) > abs(entries[b].value); });
    std::vector<bool> in_a(s, false);
    Rational best = residual_value(base, x, in_a);
    for (std::size_t k = 0; k < k_max; ++k) {
      in_a[order[k]] = true;
      best = std::max(best, residual_value(base, x, in_a));
    }
    return best;
  }
  std::size_t total = 0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    total += detail::binomial_capped(s, k, subset_cap + 1);
    if (total > subset_cap) throw ResourceError("residual_sum_norm: subset cap exceeded");
  }
  Rational best(0);
  std::vector<bool> in_a(s, false);
  for (std::size_t k = 0; k <= k_max; ++k) {
    detail::for_each_combination(s, k, [&](const std::vector<std::size_t>& idx) {
      std::fill(in_a.begin(), in_a.end(), false);
      for (std::size_t i : idx) in_a[i] = true;
      best = std::max(best, residual_value(base, x, in_a));
      return true;
    });
  }
  return best;
}

std::vector<Rational> residual_sum_profile(const NormOracle& base, const LatticeVector& x, std::size_t subset_cap) {
  require_residual_base(base);
  const std::size_t s = x.support_size();
  if (s >= 62 || (std::uint64_t{1} << s) > subset_cap) throw ResourceError("residual_sum_profile: subset cap exceeded");
  std::vector<Rational> best_by_size(s + 1, Rational(0));
  if (residual_profile_fast(base, x, best_by_size)) {
    for (std::size_t n = 1; n <= s; ++n) best_by_size[n] = std::max(best_by_size[n], best_by_size[n - 1]);
    return best_by_size;
  }
  std::vector<bool> in_a(s, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < s; ++i) {
      in_a[i] = ((mask >> i) & 1U) != 0;
      count += in_a[i] ? 1 : 0;
    }
    const Rational v = residual_value(base, x, in_a);
    if (v > best_by_size[count]) best_by_size[count] = v;
  }
  for (std::size_t n = 1; n <= s; ++n) best_by_size[n] = std::max(best_by_size[n], best_by_size[n - 1]);
  return best_by_size;
}

namespace {

Rational series_term(const Rational& residual, ResidualReading reading) {
  return reading == ResidualReading::sup_is_norm ? Rational(residual * residual) : residual;
}

}  // namespace

Rational troyanski_norm_sq(const NormOracle& base, const LatticeVector& x, const TroyanskiOptions& options) {
  if (x.is_zero()) return Rational(0);
  const std::vector<Rational> profile = residual_sum_profile(base, x, options.subset_cap);
  const std::size_t s = x.support_size();
  Rational total = day_norm_sq(x);
  for (std::size_t n = 0; n <= s; ++n) total += pow2_neg(static_cast<unsigned>(n)) * series_term(profile[n], options.reading);
  // Σ_{n>s} 2^{-n} t_s = 2^{-s} t_s, since ‖x‖_n = ‖x‖_s for n >= s.
  total += pow2_neg(static_cast<unsigned>(s)) * series_term(profile[s], options.reading);
  return total;
}

Rational troyanski_series_partial(const NormOracle& base, const LatticeVector& x, std::size_t last,
                                  const TroyanskiOptions& options) {
  if (x.is_zero()) return Rational(0);
  const std::vector<Rational> profile = residual_sum_profile(base, x, options.subset_cap);
  const std::size_t s = x.support_size();
  Rational total = day_norm_sq(x);
  for (std::size_t n = 0; n <= last; ++n) {
    total += pow2_neg(static_cast<unsigned>(n)) * series_term(profile[std::min(n, s)], options.reading);
  }
  return total;
}

std::vector<Rational> t_embed(const SetFamily& family, const LatticeVector& x) {
  require_same_ground(family.ground_ptr(), x.gamma_ptr(), "t_embed");
  std::vector<Rational> out;
  out.reserve(family.size());
  for (const auto& a : family.members()) out.push_back(sum_over(x, a));
  return out;
}

Rational sup_abs(const std::vector<Rational>& values) {
  Rational best(0);
  for (const auto& v : values) best = std::max(best, abs(v));
  return best;
}

DualNormCertificate adequate_dual_norm(const SetFamily& family, const DualFunctional& f, std::size_t cap) {
  require_same_ground(family.ground_ptr(), f.coefficients.gamma_ptr(), "dual_norm");
  if (!family.is_downward_closed()) throw DomainError("dual_norm: family must be downward-closed");
  const auto entries = f.coefficients.entries();
  const std::size_t k = entries.size();
  DualNormCertificate cert{Rational(0), {}, {}, LatticeVector(family.ground_ptr())};
  if (k == 0) return cert;

  const Subset support = f.coefficients.support();
  std::vector<Rational> weight(k);
  for (std::size_t r = 0; r < k; ++r) weight[r] = abs(entries[r].value);

  // Columns: maximal members cut down to the support, then re-maximalized.
  std::vector<Subset> cut;
  for (const auto& a : maximal_members(family)) {
    Subset c = a & support;
    if (!c.empty()) cut.push_back(std::move(c));
  }
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  std::vector<Subset> columns;
  for (std::size_t i = 0; i < cut.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < cut.size() && !dominated; ++j) dominated = cut[i].is_proper_subset_of(cut[j]);
    if (!dominated) columns.push_back(cut[i]);
  }
  const std::size_t m = columns.size();
  std::vector<std::vector<bool>> incidence(k, std::vector<bool>(m));
  for (std::size_t r = 0; r < k; ++r) {
    bool covered = false;
    for (std::size_t c = 0; c < m; ++c) {
      incidence[r][c] = columns[c].contains(entries[r].index);
      covered = covered || incidence[r][c];
    }
    if (!covered) throw DomainError("dual_norm: a support coordinate lies in no member (family lacks a singleton)");
  }
  if (detail::binomial_capped(m + k, k, cap + 1) > cap) throw ResourceError("dual_norm: LP basis cap exceeded");

  // Covering side: min Σ μ_c subject to Σ_{c∋r} μ_c >= w_r, μ >= 0.
  std::optional<Rational> best_cover;
  std::vector<Rational> cover_weights;
  for (std::size_t b = 1; b <= std::min(k, m); ++b) {
    detail::for_each_combination(m, b, [&](const std::vector<std::size_t>& cols) {
      detail::for_each_combination(k, b, [&](const std::vector<std::size_t>& rows) {
        std::vector<std::vector<Rational>> a(b, std::vector<Rational>(b));
        std::vector<Rational> rhs(b);
        for (std::size_t i = 0; i < b; ++i) {
          rhs[i] = weight[rows[i]];
          for (std::size_t j = 0; j < b; ++j) a[i][j] = incidence[rows[i]][cols[j]] ? 1 : 0;
        }
        auto mu = detail::solve_exact(std::move(a), std::move(rhs));
        if (!mu) return true;
        Rational obj(0);
        for (const auto& v : *mu) {
          if (v < 0) return true;
          obj += v;
        }
        for (std::size_t r = 0; r < k; ++r) {
          Rational lhs(0);
          for (std::size_t j = 0; j < b; ++j) {
            if (incidence[r][cols[j]]) lhs += (*mu)[j];
          }
          if (lhs < weight[r]) return true;
        }
        if (!best_cover || obj < *best_cover) {
          best_cover = obj;
          cover_weights.assign(m, Rational(0));
          for (std::size_t j = 0; j < b; ++j) cover_weights[cols[j]] = (*mu)[j];
        }
        return true;
      });
      return true;
    });
  }

  // Packing side: max Σ w_r y_r subject to Σ_{r∈c} y_r <= 1, y >= 0.
  Rational best_pack(0);
  std::vector<Rational> pack_point(k, Rational(0));
  for (std::size_t tight = 1; tight <= std::min(k, m); ++tight) {
    // `tight` columns hold with equality; the other k - tight coordinates are zero.
    detail::for_each_combination(k, tight, [&](const std::vector<std::size_t>& free_rows) {
      detail::for_each_combination(m, tight, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Rational>> a(tight, std::vector<Rational>(tight));
        std::vector<Rational> rhs(tight, Rational(1));
        for (std::size_t i = 0; i < tight; ++i) {
          for (std::size_t j = 0; j < tight; ++j) a[i][j] = incidence[free_rows[j]][cols[i]] ? 1 : 0;
        }
        auto y = detail::solve_exact(std::move(a), std::move(rhs));
        if (!y) return true;
        for (const auto& v : *y) {
          if (v < 0) return true;
        }
        for (std::size_t c = 0; c < m; ++c) {
          Rational lhs(0);
          for (std::size_t j = 0; j < tight; ++j) {
            if (incidence[free_rows[j]][c]) lhs += (*y)[j];
          }
          if (lhs > 1) return true;
        }
        Rational obj(0);
        for (std::size_t j = 0; j < tight; ++j) obj += weight[free_rows[j]] * (*y)[j];
        if (obj > best_pack) {
          best_pack = obj;
          std::fill(pack_point.begin(), pack_point.end(), Rational(0));
          for (std::size_t j = 0; j < tight; ++j) pack_point[free_rows[j]] = (*y)[j];
        }
        return true;
      });
      return true;
    });
  }

  if (!best_cover || *best_cover != best_pack) {
    throw std::logic_error("dual_norm: covering and packing optima disagree");
  }
  cert.value = *best_cover;
  cert.columns = std::move(columns);
  cert.cover = std::move(cover_weights);
  std::vector<LatticeVector::Entry> packing;
  for (std::size_t r = 0; r < k; ++r) packing.push_back({entries[r].index, pack_point[r]});
  cert.packing = LatticeVector(family.ground_ptr(), std::move(packing));
  return cert;
}

Rational dual_norm(const NormOracle& norm, const DualFunctional& f, std::size_t cap) {
  switch (norm.kind()) {
    case NormKind::l1: return NormOracle::linf().evaluate(f.coefficients);
    case NormKind::linf: return NormOracle::l1().evaluate(f.coefficients);
    case NormKind::adequate: return adequate_dual_norm(norm.family(), f, cap).value;
    case NormKind::lp: throw DomainError("dual_norm: ℓp duals are float-valued; use dual_norm_float");
    case NormKind::day:
    case NormKind::troyanski: throw DomainError("dual_norm: no exact method for " + norm.name());
  }
  throw DomainError("dual_norm: unsupported norm");
}

double dual_norm_float(const NormOracle& norm, const DualFunctional& f) {
  if (norm.kind() != NormKind::lp) return to_double(dual_norm(norm, f));
  const double p = norm.exponent();
  if (p == 1.0) return to_double(NormOracle::linf().evaluate(f.coefficients));
  const double q = p / (p - 1.0);
  double s = 0.0;
  for (const auto& e : f.coefficients.entries()) s += std::pow(std::fabs(to_double(e.value)), q);
  return std::pow(s, 1.0 / q);
}

std::vector<SetFamily> membership_families(const NormOracle& norm, const IndexSetPtr& ground, std::size_t n_max,
                                           std::size_t max_ground) {
  if (norm.kind() == NormKind::adequate) require_same_ground(norm.family().ground_ptr(), ground, "membership_families");
  const std::size_t n = ground->size();
  if (n > max_ground || n >= 63) throw ResourceError("membership_families: ground set too large to enumerate");
  std::vector<std::vector<Subset>> levels(n_max);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset a = Subset::from_mask(n, mask);
    const DualFunctional f = indicator_functional(ground, a);
    if (norm.flags().is_exact) {
      const Rational v = dual_norm(norm, f);
      for (std::size_t level = 1; level <= n_max; ++level) {
        if (v <= Rational(static_cast<long>(level))) levels[level - 1].push_back(a);
      }
    } else {
      const double v = dual_norm_float(norm, f);
      for (std::size_t level = 1; level <= n_max; ++level) {
        if (v <= static_cast<double>(level) + 1e-12) levels[level - 1].push_back(a);
      }
    }
  }
  std::vector<SetFamily> out;
  for (auto& members : levels) {
    SetFamily fam(ground, std::move(members), Provenance::norm_membership);
    if (!fam.is_downward_closed()) throw DomainError("membership_families: a level is not downward-closed");
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace renormlab
