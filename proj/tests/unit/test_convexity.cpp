#include "doctest.h"

#include <cmath>

#include "renormlab/convexity.hpp"
#include "renormlab/errors.hpp"

using namespace renormlab;

namespace {

LatticeVector vec(const IndexSetPtr& g, std::vector<Rational> v) { return LatticeVector::from_dense(g, v); }

}  // namespace

TEST_CASE("flat segments") {
  auto g = IndexSet::numbered(2);
  CHECK(flat_segment(NormOracle::linf(), vec(g, {1, 1}), vec(g, {1, -1})));
  CHECK(flat_segment(NormOracle::l1(), vec(g, {1, 0}), vec(g, {0, 1})));
  CHECK_FALSE(flat_segment(NormOracle::day(), vec(g, {1, 0}), vec(g, {0, 1})));
  CHECK(positively_parallel(vec(g, {1, 2}), vec(g, {2, 4})));
  CHECK_FALSE(positively_parallel(vec(g, {1, 2}), vec(g, {-1, -2})));
  // squared oracles: parallel vectors are flat
  CHECK(flat_segment(NormOracle::day(), vec(g, {1, 2}), vec(g, {2, 4})));
}

TEST_CASE("strict convexity probe controls") {
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    auto g = IndexSet::numbered(dim);
    for (const auto& n : {NormOracle::linf(), NormOracle::l1()}) {
      const auto p = strict_convexity_probe(n, g, 20, 1);
      REQUIRE(p.witness);
      CHECK(recheck_midpoint(n, *p.witness));
      CHECK(p.witness->deficiency == 0);
    }
    const auto day = strict_convexity_probe(NormOracle::day(), g, 300, 2);
    CHECK_FALSE(day.witness);
    CHECK(day.min_deficiency > 0);
  }
}

TEST_CASE("LUR defect") {
  auto g = IndexSet::numbered(2);
  const auto x = vec(g, {1, 1});
  CHECK(lur_defect(NormOracle::day(), x, x) == 0);
  CHECK(lur_defect(NormOracle::linf(), x, vec(g, {1, -1})) == 0);
  CHECK(lur_defect(NormOracle::l1(), x, vec(g, {3, -2})) >= 0);
  CHECK_THROWS_AS(lur_defect(NormOracle::lp(2.0), x, x), DomainError);
  const auto rows = lur_table(NormOracle::day(), IndexSet::numbered(3), 30, 4);
  CHECK(table_monotone(rows));
  CHECK(rows.back().count > 0);
}

TEST_CASE("strictly lattice check") {
  auto g = IndexSet::make({"a", "b"});
  const auto fam = SetFamily::powerset(g);
  const auto t = strictly_lattice_check(NormOracle::troyanski(NormOracle::linf()), fam, 200, 3);
  CHECK(t.pass);
  CHECK(t.indicator_pairs == 5);
  const auto l = strictly_lattice_check(NormOracle::linf(), fam, 10, 3);
  CHECK_FALSE(l.pass);
  REQUIRE(l.witness);
  CHECK(recheck_lattice(NormOracle::linf(), *l.witness));
  const auto single = strictly_lattice_check(NormOracle::adequate(SetFamily::singletons(g)), fam, 10, 3);
  CHECK_FALSE(single.pass);
}

TEST_CASE("smoothness probe") {
  auto g = IndexSet::numbered(2);
  const std::vector<double> grid{1e-1, 1e-2, 1e-3, 1e-4};
  const auto l2 = smoothness_probe(NormOracle::lp(2.0), vec(g, {1, 2}), {vec(g, {1, 0}), vec(g, {0, 1})}, grid);
  CHECK(l2.nonnegative);
  CHECK_FALSE(l2.non_smooth);
  const auto l1 = smoothness_probe(NormOracle::l1(), vec(g, {1, 0}), {vec(g, {0, 1})}, grid);
  CHECK(l1.non_smooth);
  CHECK(l1.quotients[0].back() == doctest::Approx(2.0));
  CHECK_THROWS_AS(smoothness_probe(NormOracle::l1(), vec(g, {0, 0}), {}, grid), DomainError);
}

TEST_CASE("equivalence constants") {
  auto g = IndexSet::numbered(3);
  const auto same = equivalence_constants(NormOracle::l1(), NormOracle::l1(), g, 20, 1);
  CHECK(*same.low_exact == 1);
  CHECK(*same.high_exact == 1);
  const auto c = equivalence_constants(NormOracle::l1(), NormOracle::linf(), g, 50, 1);
  CHECK(*c.low_exact == Rational(1, 3));
  CHECK(*c.high_exact == 1);
  const auto t = equivalence_constants(NormOracle::linf(), NormOracle::troyanski(NormOracle::linf()), g, 50, 1);
  CHECK(t.low > 0);
  CHECK(std::isfinite(t.high));
}
