#include "doctest.h"

#include "renormlab/errors.hpp"
#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/subset.hpp"

using namespace renormlab;

namespace {

Rational q(const char* s) { return parse_rational(s); }

LatticeVector vec(const IndexSetPtr& g, std::vector<Rational> v) { return LatticeVector::from_dense(g, v); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(q("3/2") == Rational(3, 2));
  CHECK(q("-4") == Rational(-4));
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("abc"), ParseError);
  CHECK_THROWS_AS(q("1/-2"), ParseError);
}

TEST_CASE("simplest rational in an open interval") {
  CHECK(simplest_between(Rational(0), Rational(1, 2)) == Rational(1, 3));
  CHECK(simplest_between(Rational(1, 2), Rational(1)) == Rational(2, 3));
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_between(Rational(3, 2), Rational(5, 2)) == Rational(2));
  CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == Rational(0));
  CHECK(simplest_between(Rational(-1, 2), Rational(0)) == Rational(-1, 3));
}

TEST_CASE("exact square roots") {
  Rational r;
  CHECK(exact_sqrt(Rational(9, 16), r));
  CHECK(r == Rational(3, 4));
  CHECK_FALSE(exact_sqrt(Rational(2), r));
}

TEST_CASE("index sets sort naturally and reject duplicates") {
  auto g = IndexSet::make({"t10", "t2", "t1"});
  CHECK(g->labels() == std::vector<std::string>{"t1", "t2", "t10"});
  CHECK_THROWS_AS(IndexSet::make({"a", "a"}), DomainError);
}

TEST_CASE("meet and pointwise order") {
  auto g = IndexSet::make({"a", "b", "c"});
  CHECK(meet(vec(g, {1, 2, 0}), vec(g, {2, 1, 3})) == vec(g, {1, 1, 0}));
  const auto x = vec(g, {3, 1, 2});
  CHECK(meet(x, x) == x);
  CHECK(meet(LatticeVector::indicator(g, g->subset_of({"a", "b"})), LatticeVector::indicator(g, g->subset_of({"b", "c"}))) ==
        LatticeVector::indicator(g, g->subset_of({"b"})));
  auto g2 = IndexSet::make({"a", "b"});
  CHECK(pointwise_compare(vec(g2, {1, 0}), vec(g2, {1, 1})) == Order::less);
  CHECK(pointwise_compare(vec(g2, {1, 0}), vec(g2, {0, 1})) == Order::incomparable);
  CHECK(pointwise_compare(vec(g2, {1, 0}), vec(g2, {1, 0})) == Order::equal);
  CHECK_THROWS_AS(meet(vec(g, {1, 0, 0}), vec(g2, {1, 0})), DomainError);
}

TEST_CASE("abs_restrict") {
  auto g = IndexSet::make({"a", "b"});
  CHECK(abs_restrict(vec(g, {3, -4}), g->subset_of({"b"})) == vec(g, {0, 4}));
  CHECK(abs_restrict(vec(g, {3, -4}), Subset(2)).is_zero());
  auto g3 = IndexSet::make({"a", "b", "c"});
  const Subset a = g3->subset_of({"a", "b"});
  const Subset b = g3->subset_of({"b", "c"});
  CHECK(abs_restrict(LatticeVector::indicator(g3, a), b) == LatticeVector::indicator(g3, a & b));
}

TEST_CASE("sparse form drops zeros") {
  auto g = IndexSet::make({"a", "b"});
  const auto x = vec(g, {0, 2});
  CHECK(x.support_size() == 1);
  CHECK((x - x).is_zero());
}

TEST_CASE("canonical subset order is by size then lexicographic") {
  Subset e(3);
  Subset a(3, {0});
  Subset c(3, {2});
  Subset ab(3, {0, 1});
  CHECK(e < a);
  CHECK(a < c);
  CHECK(c < ab);
}

TEST_CASE("adequacy validation") {
  auto g = IndexSet::make({"a", "b"});
  CHECK(validate_adequate(SetFamily::from_labels(g, {{}, {"a"}, {"b"}})).is_adequate);
  CHECK(validate_adequate(SetFamily::powerset(g)).is_adequate);
  const auto bad = validate_adequate(SetFamily::from_labels(g, {{}, {"a"}, {"a", "b"}}));
  CHECK_FALSE(bad.is_adequate);
  bool singleton_rule = false;
  bool downward_rule = false;
  for (const auto& v : bad.violations) {
    if (v.witness == g->subset_of({"b"})) {
      singleton_rule |= v.rule == "singletons";
      downward_rule |= v.rule == "downward-closed";
    }
  }
  CHECK(singleton_rule);
  CHECK(downward_rule);
  CHECK_FALSE(bad.note.empty());
}

TEST_CASE("downward closure") {
  auto g = IndexSet::make({"a", "b", "c"});
  const auto one = downward_close(SetFamily::from_labels(g, {{"a", "b"}}));
  CHECK(one == SetFamily::from_labels(g, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}}));
  CHECK(downward_close(one) == one);
  // ∅, a, b, c, ab, bc: six sets
  const auto two = downward_close(SetFamily::from_labels(g, {{"a", "b"}, {"b", "c"}}));
  CHECK(two.size() == 6);
  CHECK_THROWS_AS(downward_close(SetFamily::from_labels(g, {{"a", "b", "c"}}), 4), ResourceError);
}

TEST_CASE("maximal members and k points") {
  auto g = IndexSet::make({"a", "b"});
  const auto all = maximal_members(SetFamily::powerset(g));
  REQUIRE(all.size() == 1);
  CHECK(all[0] == g->subset_of({"a", "b"}));
  CHECK(maximal_members(SetFamily::from_labels(g, {{}, {"a"}, {"b"}})).size() == 2);
  auto t = IndexSet::make({"a", "b", "c"});
  const auto chains = SetFamily::from_labels(t, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}});
  const auto m = maximal_members(chains);
  CHECK(m == std::vector<Subset>{t->subset_of({"a", "b"}), t->subset_of({"a", "c"})});
  CHECK(k_points(chains).size() == chains.size());
  CHECK(is_intersection_closed(chains));
}
