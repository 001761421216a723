#include "doctest.h"

#include "renormlab/errors.hpp"
#include "renormlab/generators.hpp"
#include "renormlab/json_io.hpp"

using namespace renormlab;
using namespace renormlab::io;

TEST_CASE("vector round trip is byte-stable") {
  const auto j = parse_json(R"({"gamma": ["a","b"], "entries": {"a": "3/2"}})");
  const auto x = vector_from_json(j);
  CHECK(x.at(0) == Rational(3, 2));
  CHECK(x.at(1) == 0);
  const std::string once = dump(vector_to_json(x));
  CHECK(dump(vector_to_json(vector_from_json(parse_json(once)))) == once);
  CHECK_THROWS_AS(vector_from_json(parse_json(R"({"gamma": ["a"], "entries": {"z": "1"}})")), ParseError);
  CHECK_THROWS_AS(vector_from_json(parse_json(R"({"gamma": ["a"], "entries": {"a": "1/0"}})")), ParseError);
  CHECK_THROWS_AS(vector_from_json(parse_json(R"({"gamma": ["a"], "entries": {}, "extra": 1})")), ParseError);
}

TEST_CASE("syntax errors carry a line") {
  try {
    parse_json("{\n\"a\": 1,\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("family, norm, pseudotree, phi round trips") {
  Rng rng(1);
  const auto f = random_adequate_family(4, 3, rng);
  CHECK(family_from_json(family_to_json(f)) == f);
  const auto n = NormOracle::troyanski(NormOracle::adequate(f));
  CHECK(dump(norm_to_json(norm_from_json(norm_to_json(n)))) == dump(norm_to_json(n)));
  CHECK(norm_from_json(parse_json(R"({"kind":"lp","p":"inf"})")).kind() == NormKind::linf);
  CHECK(norm_from_json(parse_json(R"({"kind":"lp","p":"1"})")).kind() == NormKind::l1);
  CHECK(norm_from_json(parse_json(R"({"kind":"lp","p":2.5})")).kind() == NormKind::lp);
  CHECK_THROWS_AS(norm_from_json(parse_json(R"({"kind":"nope"})")), ParseError);

  const auto p = random_tree(6, rng);
  const auto p2 = poset_from_json(poset_to_json(p));
  CHECK(p2.relation() == p.relation());
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"nodes":["a","b"],"less_than":[["a","b"],["b","a"]]})")), ParseError);

  const auto inst = random_phi(4, 3, rng);
  CHECK(phi_from_json(phi_to_json(inst)).table() == inst.table());
  CHECK_THROWS_AS(phi_from_json(parse_json(R"({"n":2,"phi":{"0-1":1}})")), ParseError);
}

TEST_CASE("interval systems and certificates round trip") {
  Rng rng(2);
  const auto s = random_interval_system(3, 3, rng);
  const auto s2 = intervals_from_json(intervals_to_json(s));
  CHECK(dump(intervals_to_json(s2)) == dump(intervals_to_json(s)));

  const auto rho = reznichenko_rho_function(s);
  const auto rho2 = rho_from_json(rho_to_json(rho));
  CHECK(rho2.points() == rho.points());
  CHECK(rho2.values() == rho.values());

  const auto cert = *fragment(rho, Rational(1, 4), FragmentMode::scheme).certificate;
  const auto back = certificate_from_json(parse_json(dump(certificate_to_json(cert))));
  CHECK(dump(certificate_to_json(back)) == dump(certificate_to_json(cert)));
}
