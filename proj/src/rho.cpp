#include "renormlab/rho.hpp"

#include <algorithm>
#include <numeric>

#include "renormlab/errors.hpp"

namespace renormlab {

bool operator<(const ConePoint& a, const ConePoint& b) {
  if (!(a.subset == b.subset)) return a.subset < b.subset;
  return a.scale < b.scale;
}

std::size_t ConePointHash::operator()(const ConePoint& p) const {
  const std::size_t h = p.subset.hash();
  const std::size_t n = mpz_get_ui(p.scale.get_num_mpz_t());
  const std::size_t d = mpz_get_ui(p.scale.get_den_mpz_t());
  return h ^ (n * 0x100000001b3ULL + d + (h << 6) + (h >> 2));
}

ConePoint make_cone_point(Rational scale, Subset subset) {
  if (scale < 0) throw DomainError("cone point: negative scale");
  if (scale == 0 || subset.empty()) return ConePoint{Rational(0), Subset(subset.universe())};
  return ConePoint{std::move(scale), std::move(subset)};
}

ConePoint indicator_point(Subset subset) { return make_cone_point(Rational(1), std::move(subset)); }

ConePoint meet(const ConePoint& x, const ConePoint& y) {
  return make_cone_point(x.scale < y.scale ? x.scale : y.scale, x.subset & y.subset);
}

namespace {

bool leq(const ConePoint& x, const ConePoint& y) {
  if (x.is_zero()) return true;
  return x.scale <= y.scale && x.subset.is_subset_of(y.subset);
}

}  // namespace

Order compare(const ConePoint& x, const ConePoint& y) {
  if (x == y) return Order::equal;
  if (leq(x, y)) return Order::less;
  if (leq(y, x)) return Order::greater;
  return Order::incomparable;
}

Subset disagreement(const ConePoint& x, const ConePoint& y) {
  Subset both = x.subset & y.subset;
  Subset out = (x.subset | y.subset) - both;
  if (x.scale != y.scale) out = out | both;
  return out;
}

bool agree_on(const ConePoint& x, const ConePoint& y, const Subset& coordinates) {
  return !disagreement(x, y).intersects(coordinates);
}

LatticeVector to_vector(const ConePoint& p, const IndexSetPtr& gamma) {
  return p.scale * LatticeVector::indicator(gamma, p.subset);
}

RhoFunction::RhoFunction(IndexSetPtr gamma, std::vector<ConePoint> points, std::vector<Rational> values,
                         Rational range_max)
    : gamma_(std::move(gamma)), range_max_(std::move(range_max)) {
  if (!gamma_) throw DomainError("RhoFunction: null index set");
  if (points.size() != values.size()) throw DomainError("RhoFunction: points and values differ in length");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  points_.reserve(points.size());
  values_.reserve(points.size());
  for (std::size_t i : order) {
    ConePoint p = make_cone_point(points[i].scale, points[i].subset);
    if (p.subset.universe() != gamma_->size()) throw DomainError("RhoFunction: point over a different index set");
    if (values[i] < 0 || values[i] > range_max_) {
      throw DomainError("RhoFunction: value " + to_string(values[i]) + " outside [0, " + to_string(range_max_) + "]");
    }
    if (!index_.emplace(p, points_.size()).second) throw DomainError("RhoFunction: duplicate point");
    points_.push_back(std::move(p));
    values_.push_back(values[i]);
  }
}

RhoFunction RhoFunction::on_family(const SetFamily& family, const std::function<Rational(const Subset&)>& value,
                                   Rational range_max) {
  std::vector<ConePoint> points;
  std::vector<Rational> values;
  for (const auto& m : family.members()) {
    points.push_back(indicator_point(m));
    values.push_back(value(m));
  }
  return RhoFunction(family.ground_ptr(), std::move(points), std::move(values), std::move(range_max));
}

std::optional<std::size_t> RhoFunction::find(const ConePoint& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RhoFunction::index_of(const ConePoint& p) const {
  const auto pos = find(p);
  if (!pos) throw DomainError("point outside the domain of rho");
  return *pos;
}

bool RhoFunction::is_meet_closed() const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (!find(meet(points_[i], points_[j]))) return false;
    }
  }
  return true;
}

bool RhoFunction::indicators_only() const {
  return std::all_of(points_.begin(), points_.end(), [](const ConePoint& p) { return p.is_zero() || p.scale == 1; });
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::monotonicity: return "monotonicity";
    case ViolationKind::star: return "star";
    case ViolationKind::symmetric: return "symmetric";
  }
  return "?";
}

Rational symmetric_d(const RhoFunction& rho, std::size_t x, std::size_t y) {
  const auto m = rho.find(meet(rho.point(x), rho.point(y)));
  if (!m) throw DomainError("symmetric_d: meet is not in the domain");
  const Rational& top = std::max(rho.value(x), rho.value(y));
  return top - rho.value(*m);
}

Rational symmetric_d(const RhoFunction& rho, const ConePoint& x, const ConePoint& y) {
  return symmetric_d(rho, rho.index_of(x), rho.index_of(y));
}

bool recheck_violation(const ViolationWitness& w, const RhoFunction& rho) {
  if (w.points.size() != 2) return false;
  const auto a = rho.find(w.points[0]);
  const auto b = rho.find(w.points[1]);
  if (!a || !b) return false;
  switch (w.kind) {
    case ViolationKind::monotonicity:
    case ViolationKind::star:
      // For distinct points the smallest cylinder meets {z <= x} only in y, so (∗)
      // fails for the pair exactly when ρ(y) >= ρ(x).
      return compare(w.points[0], w.points[1]) == Order::less && rho.value(*a) >= rho.value(*b);
    case ViolationKind::symmetric: {
      if (w.points[0] == w.points[1]) return false;
      const auto m = rho.find(meet(w.points[0], w.points[1]));
      if (!m) return false;
      const Rational dxy = std::max(rho.value(*a), rho.value(*b)) - rho.value(*m);
      return dxy <= 0;
    }
  }
  return false;
}

MonotonicityReport check_strictly_increasing(const RhoFunction& rho) {
  MonotonicityReport report;
  const std::size_t n = rho.size();
  for (std::size_t i = 0; i < n && report.pass; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || compare(rho.point(i), rho.point(j)) != Order::less) continue;
      ++report.comparable_pairs;
      if (!(rho.value(i) < rho.value(j))) {
        report.pass = false;
        report.violation = ViolationWitness{ViolationKind::monotonicity,
                                            {rho.point(i), rho.point(j)},
                                            {rho.value(i), rho.value(j)},
                                            "rho(y) >= rho(x) although y < x"};
        break;
      }
    }
  }
  if (report.pass && rho.is_meet_closed()) {
    report.symmetric_axiom_checked = true;
    if (auto v = check_symmetric_axiom(rho)) {
      report.pass = false;
      report.violation = std::move(v);
    }
  }
  return report;
}

std::optional<ViolationWitness> check_symmetric_axiom(const RhoFunction& rho) {
  const std::size_t n = rho.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational dij = symmetric_d(rho, i, j);
      const Rational dji = symmetric_d(rho, j, i);
      if (dij <= 0 || dij != dji) {
        return ViolationWitness{ViolationKind::symmetric,
                                {rho.point(i), rho.point(j)},
                                {rho.value(i), rho.value(j)},
                                dij <= 0 ? "d(x,y) <= 0 for distinct points" : "d(x,y) != d(y,x)"};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> ball(const RhoFunction& rho, const ConePoint& x, const Rational& eps) {
  const std::size_t xi = rho.index_of(x);
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < rho.size(); ++y) {
    if (rho.value(y) <= rho.value(xi) && symmetric_d(rho, xi, y) < eps) out.push_back(y);
  }
  return out;
}

Rational star_region_sup(const RhoFunction& rho, std::size_t lower, std::size_t upper, const Subset& coordinates) {
  Rational best(0);
  bool any = false;
  const ConePoint& x = rho.point(upper);
  const ConePoint& y = rho.point(lower);
  for (std::size_t z = 0; z < rho.size(); ++z) {
    const ConePoint& p = rho.point(z);
    const Order o = compare(p, x);
    if (o != Order::less && o != Order::equal) continue;
    if (!agree_on(p, y, coordinates)) continue;
    if (!any || rho.value(z) > best) best = rho.value(z);
    any = true;
  }
  return best;
}

StarWitness drop_coordinate_witness(const RhoFunction& rho, std::size_t lower, std::size_t upper) {
  const ConePoint& x = rho.point(upper);
  const ConePoint& y = rho.point(lower);
  if (compare(y, x) != Order::less) throw DomainError("drop_coordinate_witness: need lower < upper");
  if (!rho.indicators_only()) throw DomainError("drop_coordinate_witness: indicator domains only");
  const Subset diff = x.subset - y.subset;
  const std::size_t gamma = diff.first();
  Subset dropped = x.subset;
  dropped.erase(gamma);
  const auto d = rho.find(indicator_point(dropped));
  if (!d) throw DomainError("drop_coordinate_witness: 1_{A minus gamma} is not in the domain");
  StarWitness w;
  w.lower = lower;
  w.upper = upper;
  w.coordinates = Subset(x.subset.universe(), {gamma});
  w.region_sup = rho.value(*d);
  w.alpha = (w.region_sup + rho.value(upper)) / 2;
  w.construction = "drop-coordinate";
  return w;
}

bool verify_star_witness(const RhoFunction& rho, const StarWitness& w) {
  if (compare(rho.point(w.lower), rho.point(w.upper)) != Order::less) return false;
  if (!(w.alpha < rho.value(w.upper))) return false;
  if (!(w.region_sup < w.alpha)) return false;
  const ConePoint& x = rho.point(w.upper);
  const ConePoint& y = rho.point(w.lower);
  for (std::size_t z = 0; z < rho.size(); ++z) {
    const Order o = compare(rho.point(z), x);
    if (o != Order::less && o != Order::equal) continue;
    if (!agree_on(rho.point(z), y, w.coordinates)) continue;
    if (rho.value(z) > w.region_sup) return false;
    if (!(rho.value(z) < w.alpha)) return false;
  }
  return true;
}

std::optional<StarWitness> star_witness_for_pair(const RhoFunction& rho, std::size_t lower, std::size_t upper) {
  const ConePoint& x = rho.point(upper);
  const ConePoint& y = rho.point(lower);
  if (rho.indicators_only()) {
    Subset dropped = x.subset;
    dropped.erase((x.subset - y.subset).first());
    if (rho.find(indicator_point(dropped))) {
      StarWitness w = drop_coordinate_witness(rho, lower, upper);
      if (verify_star_witness(rho, w)) return w;
    }
  }
  // Candidate cylinders: each single disagreeing coordinate, then all of them, then Γ.
  const Subset diff = disagreement(x, y);
  std::vector<Subset> candidates;
  for (std::size_t g = diff.first(); g < diff.universe(); g = diff.next(g)) {
    candidates.push_back(Subset(diff.universe(), {g}));
  }
  candidates.push_back(diff);
  candidates.push_back(Subset::full(diff.universe()));
  for (const auto& f : candidates) {
    const Rational sup = star_region_sup(rho, lower, upper, f);
    if (sup < rho.value(upper)) {
      StarWitness w;
      w.lower = lower;
      w.upper = upper;
      w.coordinates = f;
      w.region_sup = sup;
      w.alpha = (sup + rho.value(upper)) / 2;
      w.construction = "search";
      return w;
    }
  }
  return std::nullopt;
}

StarReport star_check(const RhoFunction& rho) {
  StarReport report;
  report.note =
      "open sets are agreement cylinders on finite coordinate sets; on distinct points the full "
      "cylinder of y meets {z <= x} only in y, so the condition reduces to strict monotonicity. "
      "Constructive witnesses are emitted per comparable pair.";
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = 0; j < rho.size(); ++j) {
      if (i == j || compare(rho.point(i), rho.point(j)) != Order::less) continue;
      auto w = star_witness_for_pair(rho, i, j);
      if (!w) {
        report.pass = false;
        report.violation = ViolationWitness{ViolationKind::star,
                                            {rho.point(i), rho.point(j)},
                                            {rho.value(i), rho.value(j)},
                                            "no agreement cylinder separates y from the points below x"};
        return report;
      }
      report.witnesses.push_back(std::move(*w));
    }
  }
  return report;
}


// ---------------------------------------------------------------------------
// Fragmentation

const char* to_string(FragmentMode m) { return m == FragmentMode::exhaustive ? "exhaustive" : "scheme"; }

namespace {

/// Least coordinate on which the two points differ; points must be distinct.
std::size_t first_disagreement(const ConePoint& a, const ConePoint& b) { return disagreement(a, b).first(); }

/// Cylinder coordinates for x: grown from ∅ until every y ∈ K agreeing with x on F
/// has ρ(y) > ρ(x) − ε. Always terminates since the full cylinder is {x}.
Subset grow_cylinder(const RhoFunction& rho, std::size_t x, const Rational& eps) {
  const std::size_t universe = rho.gamma()->size();
  Subset f(universe);
  const Rational floor = rho.value(x) - eps;
  for (;;) {
    bool grown = false;
    for (std::size_t y = 0; y < rho.size(); ++y) {
      if (y == x || rho.value(y) > floor) continue;
      if (!agree_on(rho.point(y), rho.point(x), f)) continue;
      f.insert(first_disagreement(rho.point(y), rho.point(x)));
      grown = true;
      break;
    }
    if (!grown) return f;
  }
}

FragmentEntry make_entry(const RhoFunction& rho, const std::vector<std::size_t>& members, std::size_t chosen,
                         const Subset& f) {
  FragmentEntry e;
  e.chosen = chosen;
  e.coordinates = f;
  for (std::size_t y : members) {
    if (agree_on(rho.point(y), rho.point(chosen), f)) e.slice.push_back(y);
  }
  Rational diam(0);
  for (std::size_t i = 0; i < e.slice.size(); ++i) {
    for (std::size_t j = i + 1; j < e.slice.size(); ++j) {
      const Rational d = symmetric_d(rho, e.slice[i], e.slice[j]);
      if (d > diam) diam = d;
    }
  }
  e.diameter = diam;
  return e;
}

std::size_t argmax(const RhoFunction& rho, const std::vector<std::size_t>& members) {
  std::size_t best = members.front();
  for (std::size_t y : members) {
    if (rho.value(y) > rho.value(best)) best = y;
  }
  return best;
}

}  // namespace

FragmentResult fragment(const RhoFunction& rho, const Rational& eps, FragmentMode mode,
                        std::size_t exhaustive_limit) {
  if (eps <= 0) throw DomainError("fragment: epsilon must be positive");
  if (rho.size() == 0) throw DomainError("fragment: empty domain");
  if (!rho.is_meet_closed()) throw DomainError("fragment: domain is not meet-closed");
  FragmentResult result;
  auto mono = check_strictly_increasing(rho);
  if (!mono.pass) {
    result.violation = std::move(mono.violation);
    return result;
  }
  std::vector<Subset> cyl(rho.size());
  for (std::size_t x = 0; x < rho.size(); ++x) cyl[x] = grow_cylinder(rho, x, eps);

  FragmentationCertificate cert{mode, eps, rho, {}};
  if (mode == FragmentMode::exhaustive) {
    const std::size_t n = rho.size();
    if (n > exhaustive_limit || n >= 63) {
      throw ResourceError("fragment: exhaustive mode needs |K| <= " + std::to_string(exhaustive_limit) + ", got " +
                          std::to_string(n));
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    cert.entries.reserve(total - 1);
    std::vector<std::size_t> members;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      members.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) members.push_back(i);
      }
      const std::size_t x = argmax(rho, members);
      FragmentEntry e = make_entry(rho, members, x, cyl[x]);
      e.subset_mask = mask;
      cert.entries.push_back(std::move(e));
    }
  } else {
    std::vector<std::size_t> residual(rho.size());
    std::iota(residual.begin(), residual.end(), std::size_t{0});
    std::size_t step = 0;
    while (!residual.empty()) {
      const std::size_t x = argmax(rho, residual);
      FragmentEntry e = make_entry(rho, residual, x, cyl[x]);
      e.step = step++;
      std::vector<std::size_t> next;
      std::set_difference(residual.begin(), residual.end(), e.slice.begin(), e.slice.end(),
                          std::back_inserter(next));
      residual = std::move(next);
      cert.entries.push_back(std::move(e));
    }
  }
  result.certificate = std::move(cert);
  return result;
}

// ---------------------------------------------------------------------------
// Scaled cone

std::vector<Rational> default_scale_grid() {
  std::vector<Rational> g;
  for (int k = 0; k <= 16; ++k) g.emplace_back(k, 8);
  for (auto& q : g) q.canonicalize();
  return g;
}

RhoFunction renormalize_half(const RhoFunction& rho) {
  std::vector<Rational> values;
  values.reserve(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    values.push_back(rho.point(i).is_zero() ? Rational(0) : Rational((1 + rho.value(i) / rho.range_max()) / 2));
  }
  return RhoFunction(rho.gamma(), rho.points(), std::move(values), Rational(1));
}

namespace {

RhoFunction build_sigma(const RhoFunction& base, const std::vector<Rational>& grid) {
  std::vector<ConePoint> points{make_cone_point(Rational(0), Subset(base.gamma()->size()))};
  std::vector<Rational> values{Rational(0)};
  for (const auto& lambda : grid) {
    if (lambda == 0) continue;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base.point(i).is_zero()) continue;
      points.push_back(make_cone_point(lambda, base.point(i).subset));
      values.push_back(lambda * base.value(i));
    }
  }
  return RhoFunction(base.gamma(), std::move(points), std::move(values), Rational(2));
}

}  // namespace

ScaledCone scale_cone(const RhoFunction& rho, std::vector<Rational> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty() || grid.front() != 0) throw DomainError("scale_cone: grid must contain 0");
  if (grid.size() < 3) throw DomainError("scale_cone: grid needs at least two positive values");
  if (grid.front() < 0 || grid.back() > 2) throw DomainError("scale_cone: grid must lie in [0, 2]");
  // Any finite set is closed under pairwise min; checked anyway so a future grid type cannot slip.
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      if (!std::binary_search(grid.begin(), grid.end(), a < b ? a : b)) {
        throw DomainError("scale_cone: grid not closed under min");
      }
    }
  }
  if (!rho.indicators_only()) throw DomainError("scale_cone: rho must live on indicators");
  if (!rho.find(make_cone_point(Rational(0), Subset(rho.gamma()->size())))) {
    throw DomainError("scale_cone: K must contain the zero point");
  }
  if (!rho.is_meet_closed()) throw DomainError("scale_cone: K is not meet-closed");
  if (!check_strictly_increasing(rho).pass) throw DomainError("scale_cone: rho is not strictly increasing");
  RhoFunction base = renormalize_half(rho);
  RhoFunction sigma = build_sigma(base, grid);
  if (!sigma.is_meet_closed()) throw DomainError("scale_cone: grid cone is not meet-closed");
  auto mono = check_strictly_increasing(sigma);
  if (!mono.pass) throw DomainError("scale_cone: sigma is not strictly increasing on the grid cone");
  return ScaledCone{std::move(grid), std::move(base), std::move(sigma)};
}

ScaleStarWitness scale_star_witness(const ScaledCone& cone, const ConePoint& upper, const ConePoint& lower) {
  const RhoFunction& sigma = cone.sigma;
  const RhoFunction& base = cone.base;
  const std::size_t xi = sigma.index_of(upper);
  const std::size_t yi = sigma.index_of(lower);
  const ConePoint& x = sigma.point(xi);
  const ConePoint& y = sigma.point(yi);
  if (compare(y, x) != Order::less) throw DomainError("scale_star_witness: need lower < upper");
  const Rational& lambda = x.scale;
  const Rational& mu = y.scale;
  const Rational& rho_a = base.value_of(indicator_point(x.subset));

  ScaleStarWitness w;
  // Membership in V, per case.
  std::function<bool(const ConePoint&)> in_v;
  if (y.subset == x.subset) {
    w.which = 'a';
    w.coordinate = x.subset.first();
    w.coordinate_bound = (lambda + mu) / 2;
    w.beta = w.coordinate_bound * rho_a;
    in_v = [&w](const ConePoint& z) {
      const Rational c = z.coordinate(w.coordinate);
      return c > 0 && c < w.coordinate_bound;
    };
  } else {
    w.which = 'b';
    const std::size_t bi = base.index_of(indicator_point(y.subset));
    const std::size_t ai = base.index_of(indicator_point(x.subset));
    w.inner = star_witness_for_pair(base, bi, ai);
    if (!w.inner) {
      w.violation = ViolationWitness{ViolationKind::star,
                                     {base.point(bi), base.point(ai)},
                                     {base.value(bi), base.value(ai)},
                                     "no inner witness on K"};
      return w;
    }
    const Rational alpha = w.inner->alpha;
    w.beta = lambda / 2 * (alpha + rho_a);
    w.scale_bound = w.beta / alpha;
    const ConePoint by = base.point(bi);
    const Subset f = w.inner->coordinates;
    in_v = [&w, by, f](const ConePoint& z) {
      return agree_on(indicator_point(z.subset), by, f) && z.scale < w.scale_bound;
    };
  }

  bool ok = in_v(y) && w.beta < sigma.value(xi);
  for (std::size_t z = 0; ok && z < sigma.size(); ++z) {
    const Order o = compare(sigma.point(z), x);
    if (o != Order::less && o != Order::equal) continue;
    if (in_v(sigma.point(z)) && !(sigma.value(z) < w.beta)) {
      ok = false;
      w.violation = ViolationWitness{ViolationKind::star,
                                     {sigma.point(z), x},
                                     {sigma.value(z), sigma.value(xi)},
                                     "grid point in V with sigma >= beta"};
    }
  }
  if (!ok && !w.violation) {
    w.violation = ViolationWitness{ViolationKind::star, {y, x}, {sigma.value(yi), sigma.value(xi)},
                                   "y outside V or beta >= sigma(x)"};
  }
  w.verified = ok;
  return w;
}

}  // namespace renormlab
