#include "doctest.h"

#include "renormlab/errors.hpp"
#include "renormlab/generators.hpp"
#include "renormlab/intervals.hpp"
#include "renormlab/phi.hpp"

using namespace renormlab;

namespace {

PhiInstance small_phi() { return PhiInstance(3, {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 2}}); }

Subset s3(std::initializer_list<std::size_t> e) { return Subset(3, e); }

IntervalSystem three_chain() {
  auto u = IndexSet::make({"a", "b", "c"});
  Poset order(u, {{0, 1}, {1, 2}});
  AntichainDecomposition parts{{Subset(3, {0}), Subset(3, {1}), Subset(3, {2})}};
  return IntervalSystem(u, {SystemTree{Subset::full(3), std::move(order), std::move(parts)}});
}

}  // namespace

TEST_CASE("phi family") {
  const auto inst = small_phi();
  const auto w = phi_family(inst);
  CHECK(w.members() == std::vector<Subset>{s3({}), s3({0}), s3({1}), s3({2}), s3({0, 2}), s3({1, 2})});
  CHECK(w.provenance() == Provenance::phi);
  const PhiInstance ones(3, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}});
  CHECK(phi_family(ones).size() == 4);
  const PhiInstance huge(3, {{{0, 1}, 99}, {{0, 2}, 99}, {{1, 2}, 99}});
  CHECK(phi_family(huge).size() == 8);
  CHECK_THROWS_AS(PhiInstance(3, {{{0, 1}, 1}}), DomainError);
}

TEST_CASE("phi pi and rho") {
  const auto inst = small_phi();
  CHECK(phi_pi(inst, s3({1})).is_zero());
  const auto pi = phi_pi(inst, s3({0, 2}));
  CHECK(pi.at(inst.pair_index(0, 2)) == Rational(1, 2));
  CHECK(pi.support_size() == 1);
  CHECK_THROWS_AS(phi_pi(inst, s3({0, 1})), DomainError);
  Rational v;
  CHECK(phi_rho(inst, s3({})).exact(v));
  CHECK(v == 0);
  CHECK(phi_rho(inst, s3({2})).exact(v));
  CHECK(v == 1);
  CHECK(phi_rho(inst, s3({0, 2})).exact(v));
  CHECK(v == Rational(5, 4));
  const auto rho = phi_rho_function(inst);
  CHECK(check_strictly_increasing(rho).pass);
  CHECK(star_check(rho).pass);
}

TEST_CASE("phi pi is monotone") {
  Rng rng(12);
  for (int k = 0; k < 5; ++k) {
    const auto inst = random_phi(6, 4, rng);
    const auto w = phi_family(inst);
    for (const auto& a : w.members()) {
      for (const auto& b : w.members()) {
        if (!a.is_subset_of(b)) continue;
        const auto o = pointwise_compare(phi_pi(inst, a), phi_pi(inst, b));
        CHECK((o == Order::less || o == Order::equal));
      }
    }
    CHECK(check_strictly_increasing(phi_rho_function(inst)).pass);
  }
}

TEST_CASE("interval rho") {
  const auto s = three_chain();
  CHECK(reznichenko_rho(s, Subset(3, {0, 1})) == Rational(7, 4));
  CHECK(reznichenko_rho(s, Subset(3, {2})) == 1);
  CHECK(reznichenko_rho(s, Subset(3)) == 0);
  CHECK(intervals_family(s).size() == 7);  // ∅, 3 singletons, ab, bc, abc
  CHECK_THROWS_AS(reznichenko_rho(s, Subset(3, {0, 2})), DomainError);
}

TEST_CASE("disjoint chains") {
  auto u = IndexSet::make({"a", "b", "c", "d"});
  Poset t1(u, {{0, 1}});
  Poset t2(u, {{2, 3}});
  IntervalSystem s(u, {SystemTree{Subset(4, {0, 1}), t1, {{Subset(4, {0}), Subset(4, {1})}}},
                       SystemTree{Subset(4, {2, 3}), t2, {{Subset(4, {2}), Subset(4, {3})}}}});
  CHECK(intervals_family(s).size() == 7);
}

TEST_CASE("condition (**) is enforced") {
  auto u = IndexSet::make({"a", "b"});
  Poset t1(u, {{0, 1}});
  Poset t2(u, {{0, 1}});
  CHECK_THROWS_AS(IntervalSystem(u, {SystemTree{Subset(2, {0, 1}), t1, {{Subset(2, {0}), Subset(2, {1})}}},
                                     SystemTree{Subset(2, {0, 1}), t2, {{Subset(2, {0}), Subset(2, {1})}}}}),
                  DomainError);
}

TEST_CASE("interval star witnesses") {
  const auto s = three_chain();
  const auto w = reznichenko_star_witness(s, Subset(3, {0, 1}), Subset(3, {0}));
  CHECK(s.universe()->label(w.t) == "b");
  CHECK(w.m == 2);
  CHECK(w.alpha == Rational(13, 8));
  CHECK(w.verified);
  const auto single = reznichenko_star_witness(s, Subset(3, {0}), Subset(3));
  CHECK(single.alpha == Rational(1, 2));
  CHECK(single.verified);
  const auto pair = reznichenko_star_witness(s, Subset(3, {0, 1}), Subset(3));
  CHECK(s.universe()->label(pair.t) == "a");
  CHECK(pair.verified);
  CHECK_THROWS_AS(reznichenko_star_witness(s, Subset(3, {0}), Subset(3, {0})), DomainError);
}

TEST_CASE("random interval systems pass under the chain reading") {
  Rng rng(21);
  for (int k = 0; k < 5; ++k) {
    const auto s = random_interval_system(3, 4, rng);
    const auto rho = reznichenko_rho_function(s);
    CHECK(check_strictly_increasing(rho).pass);
    CHECK(star_check(rho).pass);
    const auto& pts = rho.points();
    for (const auto& i : pts) {
      for (const auto& j : pts) {
        if (!j.subset.is_proper_subset_of(i.subset)) continue;
        CHECK(reznichenko_star_witness(s, i.subset, j.subset).verified);
      }
    }
  }
}

TEST_CASE("vacuous reading admits non-chain intervals") {
  // a < b, a < c: {b, c} is convex but not a chain
  auto u = IndexSet::make({"a", "b", "c"});
  Poset order(u, {{0, 1}, {0, 2}});
  AntichainDecomposition parts{{Subset(3, {0}), Subset(3, {1, 2})}};
  IntervalSystem s(u, {SystemTree{Subset::full(3), order, parts}}, IntervalReading::vacuous);
  CHECK(intervals_family(s).contains(Subset(3, {1, 2})));
  // I = {b, c}, J = {b}: t = c lies in part 2 together with b, so R = {b} keeps ρ = 1 < α
  // while I = {a, b, c}, J = {a, b}: R = {a, b} has ρ = 7/4 = α.
  const auto w = reznichenko_star_witness(s, Subset::full(3), Subset(3, {0, 1}));
  CHECK_FALSE(w.verified);
  REQUIRE(w.offending);
  CHECK(*w.offending == Subset(3, {0, 1}));
}
