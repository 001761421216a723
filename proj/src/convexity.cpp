#include "renormlab/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renormlab/errors.hpp"
#include "renormlab/generators.hpp"

namespace renormlab {

namespace {

Rational exact_value(const NormOracle& norm, const LatticeVector& x) {
  if (!norm.flags().is_exact) throw DomainError(norm.name() + ": no exact evaluation");
  return norm.evaluate(x);
}

Rational squared_value(const NormOracle& norm, const LatticeVector& x) {
  const Rational v = exact_value(norm, x);
  return norm.flags().value_is_squared ? v : Rational(v * v);
}

double max_abs_diff(const LatticeVector& a, const LatticeVector& b) {
  double m = 0;
  const LatticeVector d = a - b;
  for (const auto& e : d.entries()) m = std::max(m, std::fabs(to_double(e.value)));
  return m;
}

/// x scaled by the double 1/‖x‖, carried exactly as a rational.
LatticeVector near_unit(const NormOracle& norm, const LatticeVector& x) {
  return Rational(1.0 / norm.evaluate_float(x)) * x;
}

LatticeVector nonzero_vector(const IndexSetPtr& gamma, Rng& rng) {
  for (;;) {
    LatticeVector v = random_vector(gamma, rng);
    if (!v.is_zero()) return v;
  }
}

}  // namespace

bool positively_parallel(const LatticeVector& x, const LatticeVector& y) {
  if (x.is_zero() || y.is_zero()) return true;
  if (!(x.support() == y.support())) return false;
  const auto ex = x.entries();
  const auto ey = y.entries();
  const Rational c = ey[0].value / ex[0].value;
  if (c <= 0) return false;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (ey[i].value != c * ex[i].value) return false;
  }
  return true;
}

bool flat_segment(const NormOracle& norm, const LatticeVector& x, const LatticeVector& y) {
  const Rational a = exact_value(norm, x);
  const Rational b = exact_value(norm, y);
  const Rational s = exact_value(norm, x + y);
  if (!norm.flags().value_is_squared) return s == a + b;
  // ‖x+y‖ = √a + √b  ⟺  c = s − a − b >= 0 and c² = 4ab
  const Rational c = s - a - b;
  return c >= 0 && c * c == 4 * a * b;
}

bool recheck_midpoint(const NormOracle& norm, const MidpointWitness& w) {
  if (positively_parallel(w.x, w.y)) return false;
  if (exact_value(norm, w.x) != w.value_x || exact_value(norm, w.y) != w.value_y) return false;
  const LatticeVector mid = Rational(1, 2) * (w.x + w.y);
  if (exact_value(norm, mid) != w.value_mid) return false;
  return flat_segment(norm, w.x, w.y);
}

namespace {

MidpointWitness make_midpoint_witness(const NormOracle& norm, LatticeVector x, LatticeVector y) {
  const bool sq = norm.flags().value_is_squared;
  if (!sq) {
    x = Rational(1 / exact_value(norm, x)) * x;
    y = Rational(1 / exact_value(norm, y)) * y;
  }
  MidpointWitness w{x, y, exact_value(norm, x), exact_value(norm, y), {}, sq, Rational(0)};
  w.value_mid = exact_value(norm, Rational(1, 2) * (x + y));
  // squared oracles keep the raw pair; the flat test is the exact c² = 4ab identity
  if (!sq) w.deficiency = 1 - w.value_mid;
  return w;
}

}  // namespace

ConvexityProbe strict_convexity_probe(const NormOracle& norm, const IndexSetPtr& gamma, std::size_t budget,
                                      std::uint64_t seed) {
  ConvexityProbe out;
  Rng rng(seed);
  const bool exact = norm.flags().is_exact;
  for (std::size_t k = 0; k < budget; ++k) {
    const LatticeVector x = nonzero_vector(gamma, rng);
    const LatticeVector y = nonzero_vector(gamma, rng);
    if (positively_parallel(x, y)) continue;
    ++out.samples;
    const double nx = norm.evaluate_float(x);
    const double ny = norm.evaluate_float(y);
    const double ns = norm.evaluate_float(x + y);
    out.min_deficiency = std::min(out.min_deficiency, 1.0 - ns / (nx + ny));
    if (exact && !out.witness && flat_segment(norm, x, y)) out.witness = make_midpoint_witness(norm, x, y);
  }
  if (norm.flags().is_polyhedral && exact && !out.witness && gamma->size() >= 2) {
    out.deterministic_scan = true;
    const std::size_t dim = gamma->size();
    std::vector<LatticeVector> cands;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Rational> dense(dim);
      std::size_t c = code;
      for (std::size_t i = 0; i < dim; ++i, c /= 3) dense[i] = static_cast<long>(c % 3) - 1;
      LatticeVector v = LatticeVector::from_dense(gamma, dense);
      if (!v.is_zero()) cands.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < cands.size() && !out.witness; ++i) {
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (positively_parallel(cands[i], cands[j])) continue;
        if (flat_segment(norm, cands[i], cands[j])) {
          out.witness = make_midpoint_witness(norm, cands[i], cands[j]);
          out.min_deficiency = 0;
          break;
        }
      }
    }
  }
  if (out.witness) out.min_deficiency = std::min(out.min_deficiency, 0.0);
  return out;
}

Rational lur_defect(const NormOracle& norm, const LatticeVector& x, const LatticeVector& y) {
  return 2 * squared_value(norm, x) + 2 * squared_value(norm, y) - squared_value(norm, x + y);
}

std::vector<LurRow> lur_table(const NormOracle& norm, const IndexSetPtr& gamma, std::size_t base_points,
                              std::uint64_t seed, const std::vector<double>& deltas) {
  std::vector<LurRow> rows;
  for (double d : deltas) rows.push_back(LurRow{d, 0.0, 0});
  Rng rng(seed);
  auto record = [&](const LatticeVector& x, const LatticeVector& y) {
    const double defect = to_double(lur_defect(norm, x, y));
    const double dist = max_abs_diff(x, y);
    for (auto& r : rows) {
      if (defect < r.delta) {
        r.max_distance = std::max(r.max_distance, dist);
        ++r.count;
      }
    }
  };
  for (std::size_t p = 0; p < base_points; ++p) {
    const LatticeVector x = near_unit(norm, nonzero_vector(gamma, rng));
    const LatticeVector h = nonzero_vector(gamma, rng);
    Rational t(1);
    for (int k = 0; k <= 8; ++k, t /= 10) {
      const LatticeVector y = x + t * h;
      if (y.is_zero()) continue;
      record(x, near_unit(norm, y));
    }
    record(x, near_unit(norm, nonzero_vector(gamma, rng)));
  }
  return rows;
}

bool table_monotone(const std::vector<LurRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].max_distance > rows[i - 1].max_distance) return false;
  }
  return true;
}

bool recheck_lattice(const NormOracle& norm, const LatticeWitness& w) {
  if (!abs_strictly_below(w.x, w.y)) return false;
  const Rational a = exact_value(norm, w.x);
  const Rational b = exact_value(norm, w.y);
  return a == w.value_x && b == w.value_y && a >= b;
}

LatticeCheck strictly_lattice_check(const NormOracle& norm, const SetFamily& family, std::size_t random_pairs,
                                    std::uint64_t seed) {
  LatticeCheck out;
  const IndexSetPtr& gamma = family.ground_ptr();
  auto test = [&](const LatticeVector& x, const LatticeVector& y) {
    const Rational a = exact_value(norm, x);
    const Rational b = exact_value(norm, y);
    if (!(a < b)) {
      out.pass = false;
      out.witness = LatticeWitness{x, y, a, b};
    }
  };
  const auto& members = family.members();
  std::vector<Rational> values(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) values[i] = exact_value(norm, LatticeVector::indicator(gamma, members[i]));
  for (std::size_t i = 0; i < members.size() && out.pass; ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (!members[i].is_proper_subset_of(members[j])) continue;
      ++out.indicator_pairs;
      if (!(values[i] < values[j])) {
        out.pass = false;
        out.witness = LatticeWitness{LatticeVector::indicator(gamma, members[i]),
                                     LatticeVector::indicator(gamma, members[j]), values[i], values[j]};
        break;
      }
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < random_pairs && out.pass; ++k) {
    const LatticeVector y = nonzero_vector(gamma, rng);
    // shrink y coordinatewise in absolute value; flip signs freely
    std::vector<Rational> dense = y.dense();
    bool changed = false;
    for (auto& v : dense) {
      if (v == 0) continue;
      const long choice = rng.between(0, 3);
      if (choice == 0) {
        v = 0;
        changed = true;
      } else if (choice == 1) {
        Rational f(rng.between(0, 7), 8);
        f.canonicalize();
        v *= f;
        changed = true;
      } else if (choice == 2) {
        v = -v;
      }
    }
    if (!changed) dense[y.entries()[0].index] = 0;
    const LatticeVector x = LatticeVector::from_dense(gamma, dense);
    ++out.random_pairs;
    test(x, y);
  }
  return out;
}

SmoothnessReport smoothness_probe(const NormOracle& norm, const LatticeVector& x,
                                  const std::vector<LatticeVector>& directions, const std::vector<double>& t_grid,
                                  double flag_level) {
  if (x.is_zero()) throw DomainError("smoothness_probe: x must be nonzero");
  SmoothnessReport r{x, directions, t_grid, {}, true, false, 0.0};
  const double nx = norm.evaluate_float(x);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& h : directions) {
    std::vector<double> row;
    for (double t : t_grid) {
      const Rational tq(t);
      const double q = (norm.evaluate_float(x + tq * h) + norm.evaluate_float(x - tq * h) - 2 * nx) / t;
      if (q < -kQuotientTolerance) r.nonnegative = false;
      row.push_back(q);
    }
    if (!row.empty()) {
      lo = std::min(lo, row.back());
      hi = std::max(hi, row.back());
      if (row.back() > flag_level) r.non_smooth = true;
    }
    r.quotients.push_back(std::move(row));
  }
  if (!directions.empty() && !t_grid.empty()) r.spread = hi - lo;
  return r;
}

EquivalenceConstants equivalence_constants(const NormOracle& n1, const NormOracle& n2, const IndexSetPtr& gamma,
                                           std::size_t samples, std::uint64_t seed) {
  EquivalenceConstants out;
  const bool exact = n1.flags().is_exact && n2.flags().is_exact && !n1.flags().value_is_squared &&
                     !n2.flags().value_is_squared;
  out.low = std::numeric_limits<double>::infinity();
  out.high = 0;
  auto visit = [&](const LatticeVector& x) {
    ++out.samples;
    if (exact) {
      const Rational q = n2.evaluate(x) / n1.evaluate(x);
      if (!out.low_exact || q < *out.low_exact) out.low_exact = q;
      if (!out.high_exact || q > *out.high_exact) out.high_exact = q;
    }
    const double q = n2.evaluate_float(x) / n1.evaluate_float(x);
    out.low = std::min(out.low, q);
    out.high = std::max(out.high, q);
  };
  const std::size_t dim = gamma->size();
  if (dim < 20) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << dim); ++m) {
      visit(LatticeVector::indicator(gamma, Subset::from_mask(dim, m)));
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) visit(nonzero_vector(gamma, rng));
  if (exact) {
    out.low = to_double(*out.low_exact);
    out.high = to_double(*out.high_exact);
  }
  return out;
}

}  // namespace renormlab
