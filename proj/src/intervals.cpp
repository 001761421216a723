#include "renormlab/intervals.hpp"

#include <algorithm>
#include <set>

#include "renormlab/errors.hpp"

namespace renormlab {

const char* to_string(IntervalReading r) { return r == IntervalReading::chain ? "chain" : "vacuous"; }

bool is_convex(const Poset& order, const Subset& nodes, const Subset& s) {
  const std::size_t n = order.size();
  for (std::size_t r = s.first(); r < n; r = s.next(r)) {
    for (std::size_t t = s.first(); t < n; t = s.next(t)) {
      if (!order.less(r, t)) continue;
      const Subset between = (order.above(r) & order.below(t)) & nodes;
      if (!between.is_subset_of(s)) return false;
    }
  }
  return true;
}

namespace {

std::string describe(const IndexSet& u, const Subset& s) {
  std::string out = "{";
  for (const auto& l : u.labels_of(s)) {
    if (out.size() > 1) out += ",";
    out += l;
  }
  return out + "}";
}

std::vector<Subset> enumerate_intervals(const SystemTree& tree, IntervalReading reading, std::size_t cap) {
  const std::size_t n = tree.order.size();
  std::vector<Subset> out{Subset(n)};
  const auto nodes = tree.nodes.elements();
  if (reading == IntervalReading::chain) {
    // Segments [r, t]; the closed down-set of t is a chain, so each is one.
    for (std::size_t t : nodes) {
      Subset seg(n, {t});
      out.push_back(seg);
      const Subset& down = tree.order.below(t);
      for (std::size_t r = down.first(); r < n; r = down.next(r)) {
        Subset s = (tree.order.above(r) & down) | Subset(n, {r, t});
        out.push_back(s & tree.nodes);
      }
    }
  } else {
    if (nodes.size() >= 63 || (std::uint64_t{1} << nodes.size()) > cap) {
      throw ResourceError("intervals: vacuous reading needs 2^" + std::to_string(nodes.size()) + " candidates");
    }
    const std::uint64_t total = std::uint64_t{1} << nodes.size();
    for (std::uint64_t m = 1; m < total; ++m) {
      Subset s(n);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (m >> i & 1U) s.insert(nodes[i]);
      }
      if (is_convex(tree.order, tree.nodes, s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > cap) throw ResourceError("intervals: more than " + std::to_string(cap) + " intervals");
  return out;
}

}  // namespace

IntervalSystem::IntervalSystem(IndexSetPtr universe, std::vector<SystemTree> trees, IntervalReading reading,
                               std::size_t cap)
    : universe_(std::move(universe)), trees_(std::move(trees)), reading_(reading) {
  if (!universe_) throw DomainError("IntervalSystem: null universe");
  for (std::size_t a = 0; a < trees_.size(); ++a) {
    const SystemTree& t = trees_[a];
    const std::string tag = "tree " + std::to_string(a);
    require_same_ground(universe_, t.order.nodes_ptr(), "IntervalSystem");
    if (t.nodes.universe() != universe_->size()) throw DomainError(tag + ": node set over a different universe");
    for (const auto& [x, y] : t.order.relation()) {
      if (!t.nodes.contains(x) || !t.nodes.contains(y)) throw DomainError(tag + ": relation leaves the tree");
    }
    const auto check = validate_pseudotree(t.order);
    if (!check.pass) {
      throw DomainError(tag + ": down-set of " + universe_->label(*check.witness) + " is not a chain");
    }
    Subset covered(universe_->size());
    for (std::size_t n = 0; n < t.parts.parts.size(); ++n) {
      const Subset& part = t.parts.parts[n];
      if (!part.is_subset_of(t.nodes)) throw DomainError(tag + ": part " + std::to_string(n + 1) + " leaves the tree");
      if (covered.intersects(part)) throw DomainError(tag + ": parts overlap");
      if (!t.order.is_antichain(part)) throw DomainError(tag + ": part " + std::to_string(n + 1) + " is not an antichain");
      covered = covered | part;
    }
    if (!(covered == t.nodes)) throw DomainError(tag + ": decomposition does not cover the tree");
    per_tree_.push_back(enumerate_intervals(t, reading_, cap));
  }
  for (std::size_t a = 0; a < trees_.size(); ++a) {
    for (std::size_t b = a + 1; b < trees_.size(); ++b) {
      std::vector<Subset> shared;
      std::set_intersection(per_tree_[a].begin(), per_tree_[a].end(), per_tree_[b].begin(), per_tree_[b].end(),
                            std::back_inserter(shared));
      for (const auto& s : shared) {
        if (s.size() > 1) {
          throw DomainError("IntervalSystem: " + describe(*universe_, s) + " is an interval of trees " +
                            std::to_string(a) + " and " + std::to_string(b));
        }
      }
    }
  }
}

std::optional<std::size_t> IntervalSystem::owner(const Subset& s) const {
  for (std::size_t a = 0; a < per_tree_.size(); ++a) {
    if (std::binary_search(per_tree_[a].begin(), per_tree_[a].end(), s)) return a;
  }
  return std::nullopt;
}

SetFamily intervals_family(const IntervalSystem& s) {
  std::vector<Subset> all{Subset(s.universe()->size())};
  for (std::size_t a = 0; a < s.trees().size(); ++a) {
    const auto& iv = s.intervals_of(a);
    all.insert(all.end(), iv.begin(), iv.end());
  }
  return SetFamily(s.universe(), std::move(all), Provenance::intervals);
}

Rational reznichenko_rho(const IntervalSystem& s, const Subset& interval) {
  if (interval.empty()) return Rational(0);
  const auto a = s.owner(interval);
  if (!a) throw DomainError("reznichenko_rho: not an interval of any tree");
  if (interval.size() == 1) return Rational(1);
  Rational r(1);
  const auto& parts = s.trees()[*a].parts.parts;
  for (std::size_t n = 1; n <= parts.size(); ++n) {
    if (interval.intersects(parts[n - 1])) r += pow2_neg(static_cast<unsigned>(n));
  }
  return r;
}

RhoFunction reznichenko_rho_function(const IntervalSystem& s) {
  return RhoFunction::on_family(
      intervals_family(s), [&](const Subset& i) { return reznichenko_rho(s, i); }, Rational(2));
}

ReznichenkoWitness reznichenko_star_witness(const IntervalSystem& s, const Subset& upper, const Subset& lower) {
  if (!lower.is_proper_subset_of(upper)) throw DomainError("reznichenko_star_witness: need J strictly inside I");
  if (!s.owner(upper) || (!lower.empty() && !s.owner(lower))) {
    throw DomainError("reznichenko_star_witness: both sets must lie in the interval family");
  }
  ReznichenkoWitness w;
  w.upper = upper;
  w.lower = lower;
  w.t = (upper - lower).first();
  if (upper.size() == 1) {
    w.alpha = Rational(1, 2);
  } else {
    const std::size_t a = *s.owner(upper);
    w.m = s.trees()[a].parts.part_of(w.t);
    w.alpha = reznichenko_rho(s, upper) - pow2_neg(static_cast<unsigned>(w.m + 1));
  }
  const Rational rho_i = reznichenko_rho(s, upper);
  const SetFamily omega = intervals_family(s);
  w.verified = w.alpha < rho_i;
  for (const auto& r : omega.members()) {
    if (!w.verified) break;
    if (!r.is_subset_of(upper) || r.contains(w.t)) continue;
    const Rational v = reznichenko_rho(s, r);
    if (!(v < w.alpha)) {
      w.verified = false;
      w.offending = r;
      w.violation = ViolationWitness{ViolationKind::star,
                                     {indicator_point(r), indicator_point(upper)},
                                     {v, rho_i},
                                     "rho(1_R) >= alpha for an interval R inside I avoiding t"};
    }
  }
  if (!w.verified && !w.violation) {
    w.violation = ViolationWitness{ViolationKind::star, {indicator_point(lower), indicator_point(upper)},
                                   {reznichenko_rho(s, lower), rho_i}, "alpha >= rho(1_I)"};
  }
  return w;
}

}  // namespace renormlab
