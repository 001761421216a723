#include "doctest.h"

#include "../oracles.hpp"
#include "renormlab/errors.hpp"
#include "renormlab/generators.hpp"
#include "renormlab/norms.hpp"

using namespace renormlab;

namespace {

LatticeVector vec(const IndexSetPtr& g, std::vector<Rational> v) { return LatticeVector::from_dense(g, v); }

SetFamily tree_chains(const IndexSetPtr& t) {
  return SetFamily::from_labels(t, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}});
}

}  // namespace

TEST_CASE("adequate norm examples") {
  auto g = IndexSet::make({"1", "2"});
  CHECK(adequate_norm(SetFamily::singletons(g), vec(g, {3, -4})) == 4);
  CHECK(adequate_norm(SetFamily::powerset(g), vec(g, {3, -4})) == 7);
  auto t = IndexSet::make({"a", "b", "c"});
  CHECK(adequate_norm(tree_chains(t), vec(t, {1, 2, 3})) == 4);
}

TEST_CASE("adequate norm matches the all-members oracle") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto f = random_adequate_family(2 + rng.below(4), 3, rng);
    const auto x = random_vector(f.ground_ptr(), rng);
    CHECK(adequate_norm(f, x) == oracle::adequate_norm(f, x));
  }
}

TEST_CASE("Day norm") {
  auto g = IndexSet::make({"a", "b"});
  CHECK(day_norm_sq(vec(g, {1, 0})) == Rational(1, 4));
  CHECK(day_norm_sq(vec(g, {0, 0})) == 0);
  CHECK(day_norm_sq(vec(g, {1, 1})) == Rational(5, 16));
  Rng rng(3);
  auto g5 = IndexSet::numbered(5);
  for (int k = 0; k < 40; ++k) {
    const auto x = random_vector(g5, rng);
    CHECK(day_norm_sq(x) == oracle::day_sq_permutations(x));
  }
}

TEST_CASE("residual sums") {
  auto g = IndexSet::make({"1", "2"});
  const auto x = vec(g, {1, 1});
  const auto linf = NormOracle::linf();
  CHECK(residual_sum_norm(linf, x, 0) == 1);
  CHECK(residual_sum_norm(linf, x, 1) == 3);
  CHECK(residual_sum_norm(linf, x, 2) == 4);
  const auto profile = residual_sum_profile(linf, x);
  CHECK(profile == std::vector<Rational>{1, 3, 4});
}

TEST_CASE("Troyanski closed form") {
  auto g = IndexSet::make({"1"});
  const auto linf = NormOracle::linf();
  CHECK(troyanski_norm_sq(linf, vec(g, {0})) == 0);
  CHECK(troyanski_norm_sq(linf, vec(g, {1})) == Rational(21, 4));
  // tail after n = 40 is exactly 2^{-40}·‖x‖_1² = 2^{-40}·4
  CHECK(troyanski_norm_sq(linf, vec(g, {1})) - troyanski_series_partial(linf, vec(g, {1}), 40) ==
        4 * pow2_neg(40));
  const auto t = NormOracle::troyanski(linf);
  CHECK(t.flags().value_is_squared);
  CHECK(t.evaluate(vec(g, {1})) == Rational(21, 4));
  CHECK_THROWS_AS(NormOracle::troyanski(NormOracle::day()), DomainError);
}

TEST_CASE("embedding T") {
  auto g = IndexSet::make({"a", "b"});
  const auto all = SetFamily::powerset(g);
  CHECK(t_embed(all, vec(g, {1, 0})) == std::vector<Rational>{0, 1, 0, 1});
  const auto x = vec(g, {1, -1});
  const auto v = t_embed(all, x);
  CHECK(v == std::vector<Rational>{0, 1, -1, 0});
  CHECK(sup_abs(v) == 1);
  CHECK(adequate_norm(all, x) == 2);
}

TEST_CASE("indicator functional") {
  auto g = IndexSet::make({"a", "b"});
  CHECK(indicator_functional(g, Subset(2)).coefficients.is_zero());
  CHECK(indicator_functional(g, Subset(2, {0, 1})).apply(vec(g, {2, 3})) == 5);
}

TEST_CASE("dual norm examples") {
  auto g = IndexSet::make({"a", "b"});
  const DualFunctional ones{vec(g, {1, 1})};
  CHECK(dual_norm(NormOracle::adequate(SetFamily::singletons(g)), ones) == 2);
  CHECK(dual_norm(NormOracle::adequate(SetFamily::powerset(g)), DualFunctional{vec(g, {1, -2})}) == 2);
  CHECK(dual_norm(NormOracle::l1(), DualFunctional{vec(g, {1, -2})}) == 2);
  CHECK(dual_norm(NormOracle::linf(), DualFunctional{vec(g, {1, -2})}) == 3);
  CHECK_THROWS_AS(dual_norm(NormOracle::day(), ones), DomainError);
  CHECK(dual_norm_float(NormOracle::lp(2.0), ones) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("dual norm agrees with vertex enumeration of the primal ball") {
  Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    const auto f = random_adequate_family(2 + rng.below(3), 3, rng);
    const auto c = random_vector(f.ground_ptr(), rng);
    const auto cert = adequate_dual_norm(f, DualFunctional{c});
    CHECK(cert.value == oracle::dual_norm_vertices(f, c.dense()));
    // covering weights are feasible and sum to the value
    Rational total(0);
    for (const auto& m : cert.cover) {
      CHECK(m >= 0);
      total += m;
    }
    CHECK(total == cert.value);
  }
}

TEST_CASE("functional norm of indicators is one") {
  Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    const auto f = random_adequate_family(2 + rng.below(4), 3, rng);
    for (const auto& a : f.members()) {
      if (a.empty()) continue;
      CHECK(dual_norm(NormOracle::adequate(f), indicator_functional(f.ground_ptr(), a)) == 1);
    }
  }
}

TEST_CASE("membership families") {
  auto t = IndexSet::make({"a", "b", "c"});
  const auto chains = SetFamily::from_labels(t, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "b", "c"}});
  const auto levels = membership_families(NormOracle::adequate(chains), t, 2);
  REQUIRE(levels.size() == 2);
  for (const auto& a : chains.members()) CHECK(levels[0].contains(a));
  // ℓ∞ on 3 atoms: ‖1_A^*‖ = |A| in ℓ1
  const auto linf = membership_families(NormOracle::linf(), t, 3);
  CHECK(linf[0].size() == 4);
  CHECK(linf[2].size() == 8);
  CHECK_THROWS_AS(membership_families(NormOracle::linf(), IndexSet::numbered(21), 1), ResourceError);
}

TEST_CASE("norm flags") {
  CHECK(NormOracle::linf().flags().is_polyhedral);
  CHECK_FALSE(NormOracle::day().flags().is_polyhedral);
  CHECK(NormOracle::day().flags().value_is_squared);
  CHECK_FALSE(NormOracle::lp(3.0).flags().is_exact);
  CHECK_THROWS_AS(NormOracle::lp(3.0).evaluate(LatticeVector(IndexSet::numbered(1))), DomainError);
}

TEST_CASE("residual profile agrees with per-n exhaustive search") {
  Rng rng(29);
  for (int k = 0; k < 40; ++k) {
    const SetFamily f = random_adequate_family(3 + k % 6, 2 + rng.below(3), rng);
    const LatticeVector x = random_vector(f.ground_ptr(), rng);
    for (const NormOracle& base : {NormOracle::adequate(f), NormOracle::linf(), NormOracle::l1()}) {
      const auto profile = residual_sum_profile(base, x);
      REQUIRE(profile.size() == x.support_size() + 1);
      for (std::size_t n = 0; n < profile.size(); ++n) CHECK(profile[n] == residual_sum_norm(base, x, n));
    }
  }
}
