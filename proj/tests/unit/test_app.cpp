#include "doctest.h"

#include <cmath>
#include <sstream>

#include "renormlab/app.hpp"
#include "renormlab/errors.hpp"
#include "renormlab/json_io.hpp"

using namespace renormlab;

namespace {

std::vector<std::pair<double, double>> parse_points(const std::string& csv) {
  std::vector<std::pair<double, double>> pts;
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "theta,x,y");
  while (std::getline(ss, line)) {
    double th, x, y;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &th, &x, &y) == 3);
    pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace

TEST_CASE("ball cross-sections") {
  const auto g = IndexSet::numbered(2);
  for (const auto& [x, y] : parse_points(app::ball_csv(NormOracle::linf(), g, 0, 1, 48))) {
    CHECK(std::max(std::fabs(x), std::fabs(y)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (const auto& [x, y] : parse_points(app::ball_csv(NormOracle::l1(), g, 0, 1, 48))) {
    CHECK(std::fabs(x) + std::fabs(y) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Strictly convex: no three consecutive points collinear.
  const auto pts = parse_points(app::ball_csv(NormOracle::day(), g, 0, 1, 96));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    const auto& c = pts[(i + 2) % pts.size()];
    const double cross = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    CHECK(std::fabs(cross) > 1e-9);
  }
  CHECK_THROWS_AS(app::ball_csv(NormOracle::day(), g, 0, 0, 8), DomainError);
}

TEST_CASE("caps parsing") {
  const app::Caps c = app::parse_caps("subsets=10,family=20", {});
  CHECK(c.subsets == 10);
  CHECK(c.family == 20);
  CHECK(app::parse_caps("family=7", {}).subsets == kDefaultSubsetCap);
  CHECK_THROWS_AS(app::parse_caps("family=0", {}), ParseError);
  CHECK_THROWS_AS(app::parse_caps("bogus=1", {}), ParseError);
  CHECK_THROWS_AS(app::parse_caps("family", {}), ParseError);
}

TEST_CASE("generated instances load and are deterministic") {
  app::GenParams p;
  p.seed = 3;
  p.q = {Rational(0), Rational(1)};
  for (const char* kind : {"tree", "pseudotree", "phi", "intervals", "sigmaq", "family"}) {
    const auto j = app::generate(kind, p);
    CHECK(io::dump(j) == io::dump(app::generate(kind, p)));
    CHECK(j["generator"]["command"] == kind);
    const app::Instance inst = app::load_instance(io::parse_json(io::dump(j)));
    CHECK(inst.kind == kind);
    CHECK(inst.rho_fn().size() == inst.k().size());
  }
  CHECK_THROWS_AS(app::generate("nope", p), DomainError);
}

TEST_CASE("instance loading is strict") {
  CHECK_THROWS_AS(app::load_instance(io::parse_json("[]")), ParseError);
  CHECK_THROWS_AS(app::load_instance(io::parse_json(R"({"kind": "tree"})")), ParseError);
  CHECK_THROWS_AS(app::load_instance(io::parse_json(R"({"kind": "tree", "instance": {}, "extra": 1})")), ParseError);
  CHECK_THROWS_AS(app::load_instance(io::parse_json(R"({"kind": "moon", "instance": {}})")), ParseError);
  // a < c, b < c with a, b incomparable: not a pseudotree.
  const char* bad = R"({"kind": "pseudotree", "instance": {"nodes": ["a", "b", "c"], "less_than": [["a", "c"], ["b", "c"]]}})";
  CHECK_THROWS_AS(app::load_instance(io::parse_json(bad)), DomainError);
}

TEST_CASE("troyanski indicator rho is normalized and strictly increasing") {
  const auto g = IndexSet::make({"a", "b", "c"});
  const SetFamily f = SetFamily::from_labels(g, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}});
  const RhoFunction rho = app::troyanski_indicator_rho(f);
  Rational top(0);
  for (const auto& v : rho.values()) top = std::max(top, v);
  CHECK(top == 1);
  CHECK(rho.value_of(indicator_point(Subset(3))) == 0);
  CHECK(check_strictly_increasing(rho).pass);
}

TEST_CASE("verify: chain interval system star suite") {
  const char* text = R"({"kind": "intervals", "instance": {"reading": "chain", "trees": [
    {"nodes": ["a", "b", "c"], "less_than": [["a", "b"], ["b", "c"]], "parts": [["a"], ["b"], ["c"]]}]}})";
  const app::Instance inst = app::load_instance(io::parse_json(text));
  const app::VerifyResult r = app::verify(inst, {"star"}, {});
  CHECK(r.pass);
  const auto& checks = r.report["suites"][0]["checks"];
  REQUIRE(checks.size() == 2);
  CHECK(checks[1]["check"] == "interval-witness");
  CHECK(checks[1]["details"]["unverified"] == 0);
  bool found = false;
  // I = {a,b,c}, J = {a,b}: t = c in part 3, α = 15/8 − 1/16.
  for (const auto& w : checks[1]["details"]["witnesses"]) {
    if (w["alpha"] == "29/16") found = true;
  }
  CHECK(found);
  CHECK_THROWS_AS(app::verify(inst, {"bogus"}, {}), DomainError);
}

TEST_CASE("verify: linf convexity control fails with a witness") {
  const char* text = R"({"kind": "family", "instance": {"gamma": ["a", "b"], "members": [[], ["a"], ["b"]], "provenance": "explicit"}})";
  const app::Instance inst = app::load_instance(io::parse_json(text));
  app::VerifyOptions opt;
  opt.norm = NormOracle::linf();
  opt.samples = 30;
  const app::VerifyResult r = app::verify(inst, {"convexity"}, opt);
  CHECK_FALSE(r.pass);
  CHECK(r.report["suites"][0]["checks"][0]["details"]["witness_rechecked"] == true);
}

TEST_CASE("verify: fragment suite emits a certificate artifact") {
  app::GenParams p;
  p.nodes = 5;
  p.seed = 9;
  const app::Instance inst = app::load_instance(app::generate("tree", p));
  const app::VerifyResult r = app::verify(inst, {"fragment"}, {});
  CHECK(r.pass);
  REQUIRE(r.artifacts.size() == 1);
  CHECK(r.artifacts[0].content["kind"] == "fragmentation");
}
