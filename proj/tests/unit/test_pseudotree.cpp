#include "doctest.h"

#include "../oracles.hpp"
#include "renormlab/errors.hpp"
#include "renormlab/generators.hpp"
#include "renormlab/norms.hpp"
#include "renormlab/pseudotree.hpp"

using namespace renormlab;

TEST_CASE("poset construction") {
  const auto p = Poset::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.less(0, 2));
  CHECK(p.covering_pairs().size() == 2);
  CHECK(p.relation().size() == 3);
  CHECK_THROWS_AS(Poset::from_labels({"a", "b"}, {{"a", "b"}, {"b", "a"}}), DomainError);
  CHECK_THROWS_AS(Poset::from_labels({"a"}, {{"a", "a"}}), DomainError);
}

TEST_CASE("pseudotree validation") {
  Rng rng(1);
  for (int k = 0; k < 10; ++k) CHECK(validate_pseudotree(random_tree(7, rng, k % 2 == 0)).pass);
  const auto diamond = Poset::from_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  const auto r = validate_pseudotree(diamond);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(diamond.nodes().label(*r.witness) == "d");
  CHECK(validate_pseudotree(Poset::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})).pass);
}

TEST_CASE("chain families") {
  const auto two = chains_family(Poset::from_labels({"a", "b"}, {{"a", "b"}}));
  CHECK(two.size() == 4);
  CHECK(two.provenance() == Provenance::chains_of_pseudotree);
  CHECK(chains_family(Poset::from_labels({"a", "b"}, {})).size() == 3);
  CHECK(chains_family(Poset::from_labels({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}})).size() == 6);
  Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const auto p = random_tree(8, rng, true);
    CHECK(chains_family(p).members() == oracle::chains_by_subsets(p));
  }
  const auto chain = Poset::from_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK_THROWS_AS(chains_family(chain, 10), ResourceError);
}

TEST_CASE("max weight chain") {
  const auto chain = Poset::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(max_weight_chain(chain, {1, 1, 1}) == 3);
  const auto tree = Poset::from_labels({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK(max_weight_chain(tree, {1, 2, 3}) == 4);
  CHECK(max_weight_chain(tree, {0, 0, 0}) == 0);
  Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    const auto p = random_tree(1 + rng.below(12), rng, k % 3 == 0);
    const auto x = random_vector(p.nodes_ptr(), rng);
    std::vector<Rational> w;
    for (const auto& v : x.dense()) w.push_back(oracle::qabs(v));
    CHECK(max_weight_chain(p, w) == adequate_norm(chains_family(p), abs(x)));
  }
}

TEST_CASE("Mirsky decomposition") {
  const auto chain = Poset::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(mirsky_decompose(chain).part_count() == 3);
  CHECK(mirsky_decompose(Poset::from_labels({"a", "b", "c"}, {})).part_count() == 1);
  Rng rng(6);
  for (int k = 0; k < 40; ++k) {
    const auto p = random_poset(1 + rng.below(6), rng);
    const auto d = mirsky_decompose(p);
    CHECK(check_decomposition(p, d).empty());
    CHECK(d.part_count() == longest_chain_length(p));
    CHECK(d.part_count() == oracle::min_antichain_partition(p));
  }
}

TEST_CASE("sigma from rho") {
  const auto one = Poset::from_labels({"a"}, {});
  const auto k1 = chains_family(one);
  const auto rho1 = RhoFunction::on_family(k1, [](const Subset& a) { return Rational(a.empty() ? 0 : 1, 2); });
  CHECK(sigma_from_rho(one, rho1).sigma == std::vector<Rational>{Rational(1, 3)});

  const auto two = Poset::from_labels({"a", "b"}, {{"a", "b"}});
  const auto g = two.nodes_ptr();
  const RhoFunction rho2(g,
                         {indicator_point(Subset(2)), indicator_point(Subset(2, {0})), indicator_point(Subset(2, {1})),
                          indicator_point(Subset(2, {0, 1}))},
                         {Rational(0), Rational(1, 2), Rational(1, 4), Rational(1)});
  const auto s = sigma_from_rho(two, rho2);
  CHECK(s.sigma == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK(s.strictly_increasing);
  CHECK(s.fibers_antichain);

  const auto flat = RhoFunction::on_family(chains_family(two), [](const Subset& a) { return Rational(a.empty() ? 0 : 1); });
  CHECK_THROWS_AS(sigma_from_rho(two, flat), DomainError);
}

TEST_CASE("Eberlein embedding") {
  const auto two = Poset::from_labels({"a", "b"}, {{"a", "b"}});
  const AntichainDecomposition d{{Subset(2, {0}), Subset(2, {1})}};
  CHECK(eberlein_image(d, two.nodes_ptr(), Subset(2)).is_zero());
  CHECK(eberlein_image(d, two.nodes_ptr(), Subset(2, {0, 1})) ==
        LatticeVector::from_dense(two.nodes_ptr(), {Rational(1, 2), Rational(1, 4)}));
  Rng rng(9);
  for (int k = 0; k < 15; ++k) {
    const auto p = random_tree(1 + rng.below(8), rng, true);
    const auto e = eberlein_embed(p, mirsky_decompose(p));
    CHECK(e.injective);
    CHECK(e.order_compatible);
  }
  const AntichainDecomposition bad{{Subset(2, {0, 1})}};
  CHECK_THROWS_AS(eberlein_embed(two, bad), DomainError);
}

TEST_CASE("sigma-Q truncation") {
  const auto p = sigma_q_truncation({Rational(0), Rational(1)});
  CHECK(p.size() == 3);
  const auto s0 = p.nodes().index_of("{0}");
  const auto s1 = p.nodes().index_of("{1}");
  const auto s01 = p.nodes().index_of("{0,1}");
  CHECK(p.less(s0, s01));
  CHECK_FALSE(p.less(s1, s01));
  const auto q = sigma_q_truncation({Rational(0), Rational(1, 2), Rational(1), Rational(2)});
  CHECK(validate_pseudotree(q).pass);
  CHECK(mirsky_decompose(q).part_count() == 4);
  CHECK_THROWS_AS(sigma_q_truncation({Rational(0), Rational(1), Rational(2)}, 6), ResourceError);
}
