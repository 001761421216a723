#include "renormlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "renormlab/errors.hpp"

namespace renormlab::io {

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

const json& at(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

IndexSetPtr gamma_from(const json& j, const char* what) {
  try {
    return IndexSet::make(string_list(j, what));
  } catch (const DomainError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json labels_json(const IndexSet& set) { return json(set.labels()); }

}  // namespace

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw ParseError(std::string(what) + ": unknown key '" + k + "'");
    }
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json labels_to_json(const IndexSet& set, const Subset& s) { return json(set.labels_of(s)); }

Subset subset_from_json(const IndexSet& set, const json& j) {
  const auto labels = string_list(j, "subset");
  Subset s(set.size());
  for (const auto& l : labels) {
    const auto i = set.find(l);
    if (!i) throw ParseError("unknown label '" + l + "'");
    s.insert(*i);
  }
  return s;
}

json vector_to_json(const LatticeVector& x) {
  json entries = json::object();
  for (const auto& e : x.entries()) entries[x.gamma().label(e.index)] = rational_to_json(e.value);
  return json{{"gamma", labels_json(x.gamma())}, {"entries", entries}};
}

LatticeVector vector_from_json(const json& j) {
  require_keys(j, {"gamma", "entries"}, "vector");
  return vector_from_json(j, gamma_from(at(j, "gamma", "vector"), "vector.gamma"));
}

LatticeVector vector_from_json(const json& j, const IndexSetPtr& gamma) {
  require_keys(j, {"gamma", "entries"}, "vector");
  if (j.contains("gamma") && !(*gamma_from(j["gamma"], "vector.gamma") == *gamma)) {
    throw ParseError("vector: gamma differs from the expected index set");
  }
  const json& entries = at(j, "entries", "vector");
  if (!entries.is_object()) throw ParseError("vector.entries: expected an object");
  std::vector<Rational> dense(gamma->size());
  for (const auto& [k, v] : entries.items()) {
    const auto i = gamma->find(k);
    if (!i) throw ParseError("vector: unknown label '" + k + "'");
    dense[*i] = rational_from_json(v);
  }
  return LatticeVector::from_dense(gamma, dense);
}

json family_to_json(const SetFamily& f) {
  json members = json::array();
  for (const auto& m : f.members()) members.push_back(labels_to_json(f.ground(), m));
  return json{{"gamma", labels_json(f.ground())}, {"members", members}, {"provenance", to_string(f.provenance())}};
}

SetFamily family_from_json(const json& j) {
  require_keys(j, {"gamma", "members", "provenance"}, "family");
  auto gamma = gamma_from(at(j, "gamma", "family"), "family.gamma");
  const json& members = at(j, "members", "family");
  if (!members.is_array()) throw ParseError("family.members: expected an array");
  std::vector<Subset> subsets;
  for (const auto& m : members) subsets.push_back(subset_from_json(*gamma, m));
  Provenance p = Provenance::explicit_members;
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw ParseError("family.provenance: expected a string");
    p = provenance_from_string(j["provenance"].get<std::string>());
  }
  return SetFamily(gamma, std::move(subsets), p);
}

json norm_to_json(const NormOracle& n) {
  switch (n.kind()) {
    case NormKind::l1: return json{{"kind", "lp"}, {"p", "1"}};
    case NormKind::linf: return json{{"kind", "lp"}, {"p", "inf"}};
    case NormKind::lp: return json{{"kind", "lp"}, {"p", n.exponent()}};
    case NormKind::adequate: return json{{"kind", "adequate"}, {"family", family_to_json(n.family())}};
    case NormKind::day: return json{{"kind", "day"}};
    case NormKind::troyanski: {
      json out{{"kind", "troyanski"}, {"base", norm_to_json(n.base())}};
      if (n.troyanski_options().reading == ResidualReading::sup_is_square) out["reading"] = "sup-is-square";
      return out;
    }
  }
  return json{};
}

NormOracle norm_from_json(const json& j) {
  const std::string kind = at(j, "kind", "norm").is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "day") {
    require_keys(j, {"kind"}, "norm");
    return NormOracle::day();
  }
  if (kind == "adequate") {
    require_keys(j, {"kind", "family"}, "norm");
    return NormOracle::adequate(family_from_json(at(j, "family", "norm")));
  }
  if (kind == "troyanski") {
    require_keys(j, {"kind", "base", "reading"}, "norm");
    TroyanskiOptions opt;
    if (j.contains("reading")) {
      const std::string r = j["reading"].is_string() ? j["reading"].get<std::string>() : "";
      if (r == "sup-is-square") {
        opt.reading = ResidualReading::sup_is_square;
      } else if (r != "sup-is-norm") {
        throw ParseError("norm.reading: expected \"sup-is-norm\" or \"sup-is-square\"");
      }
    }
    return NormOracle::troyanski(norm_from_json(at(j, "base", "norm")), opt);
  }
  if (kind == "lp") {
    require_keys(j, {"kind", "p"}, "norm");
    const json& p = at(j, "p", "norm");
    if (p.is_string()) {
      const std::string s = p.get<std::string>();
      if (s == "1") return NormOracle::l1();
      if (s == "inf") return NormOracle::linf();
      try {
        return NormOracle::lp(std::stod(s));
      } catch (const std::invalid_argument&) {
        throw ParseError("norm.p: expected \"1\", \"inf\" or a number");
      }
    }
    if (p.is_number()) {
      const double v = p.get<double>();
      if (v == 1.0) return NormOracle::l1();
      return NormOracle::lp(v);
    }
    throw ParseError("norm.p: expected \"1\", \"inf\" or a number");
  }
  throw ParseError("norm: unknown kind '" + kind + "'");
}

json poset_to_json(const Poset& p) {
  json rel = json::array();
  for (const auto& [a, b] : p.covering_pairs()) rel.push_back({p.nodes().label(a), p.nodes().label(b)});
  return json{{"nodes", labels_json(p.nodes())}, {"less_than", rel}};
}

Poset poset_from_json(const json& j) {
  const auto nodes = string_list(at(j, "nodes", "pseudotree"), "pseudotree.nodes");
  const json& rel = at(j, "less_than", "pseudotree");
  if (!rel.is_array()) throw ParseError("pseudotree.less_than: expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : rel) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("pseudotree.less_than: expected [\"a\", \"b\"] pairs");
    }
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    return Poset::from_labels(nodes, pairs);
  } catch (const DomainError& e) {
    throw ParseError(std::string("pseudotree: ") + e.what());
  }
}

json decomposition_to_json(const Poset& p, const AntichainDecomposition& d) {
  json parts = json::array();
  for (const auto& part : d.parts) parts.push_back(labels_to_json(p.nodes(), part));
  return parts;
}

AntichainDecomposition decomposition_from_json(const Poset& p, const json& j) {
  if (!j.is_array()) throw ParseError("parts: expected an array of node lists");
  AntichainDecomposition d;
  for (const auto& part : j) d.parts.push_back(subset_from_json(p.nodes(), part));
  return d;
}

json phi_to_json(const PhiInstance& inst) {
  json phi = json::object();
  for (const auto& [k, v] : inst.table()) phi[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  return json{{"n", inst.n()}, {"phi", phi}};
}

PhiInstance phi_from_json(const json& j) {
  const json& n = at(j, "n", "phi instance");
  if (!n.is_number_unsigned()) throw ParseError("phi instance: n must be a nonnegative integer");
  const json& phi = at(j, "phi", "phi instance");
  if (!phi.is_object()) throw ParseError("phi instance: phi must be an object");
  std::map<std::pair<std::size_t, std::size_t>, unsigned long> table;
  for (const auto& [k, v] : phi.items()) {
    const auto comma = k.find(',');
    if (comma == std::string::npos) throw ParseError("phi instance: key '" + k + "' is not \"i,j\"");
    std::size_t i = 0;
    std::size_t jx = 0;
    try {
      std::size_t used = 0;
      i = std::stoul(k.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(k);
      jx = std::stoul(k.substr(comma + 1), &used);
      if (used != k.size() - comma - 1) throw std::invalid_argument(k);
    } catch (const std::logic_error&) {
      throw ParseError("phi instance: key '" + k + "' is not \"i,j\"");
    }
    if (!v.is_number_unsigned()) throw ParseError("phi instance: value at '" + k + "' must be a positive integer");
    table[{i, jx}] = v.get<unsigned long>();
  }
  try {
    return PhiInstance(n.get<std::size_t>(), std::move(table));
  } catch (const DomainError& e) {
    throw ParseError(std::string("phi instance: ") + e.what());
  }
}

json intervals_to_json(const IntervalSystem& s) {
  json trees = json::array();
  const IndexSet& u = *s.universe();
  for (const auto& t : s.trees()) {
    json rel = json::array();
    for (const auto& [a, b] : t.order.covering_pairs()) rel.push_back({u.label(a), u.label(b)});
    json parts = json::array();
    for (const auto& part : t.parts.parts) parts.push_back(labels_to_json(u, part));
    trees.push_back(json{{"nodes", labels_to_json(u, t.nodes)}, {"less_than", rel}, {"parts", parts}});
  }
  return json{{"reading", to_string(s.reading())}, {"trees", trees}};
}

IntervalSystem intervals_from_json(const json& j, std::size_t cap) {
  const json& trees = at(j, "trees", "interval system");
  if (!trees.is_array()) throw ParseError("interval system: trees must be an array");
  IntervalReading reading = IntervalReading::chain;
  if (j.contains("reading")) {
    const std::string r = j["reading"].is_string() ? j["reading"].get<std::string>() : "";
    if (r == "vacuous") {
      reading = IntervalReading::vacuous;
    } else if (r != "chain") {
      throw ParseError("interval system: reading must be \"chain\" or \"vacuous\"");
    }
  }
  std::vector<std::string> all;
  for (const auto& t : trees) {
    for (const auto& l : string_list(at(t, "nodes", "tree"), "tree.nodes")) all.push_back(l);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto universe = IndexSet::make(all);
  std::vector<SystemTree> out;
  for (const auto& t : trees) {
    require_keys(t, {"nodes", "less_than", "parts"}, "tree");
    const Subset nodes = subset_from_json(*universe, t["nodes"]);
    std::vector<Poset::Pair> rel;
    const json& lt = at(t, "less_than", "tree");
    if (!lt.is_array()) throw ParseError("tree.less_than: expected an array of pairs");
    for (const auto& e : lt) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError("tree.less_than: expected [\"a\", \"b\"] pairs");
      }
      const auto a = universe->find(e[0].get<std::string>());
      const auto b = universe->find(e[1].get<std::string>());
      if (!a || !b) throw ParseError("tree.less_than: unknown node");
      rel.emplace_back(*a, *b);
    }
    try {
      Poset order(universe, rel);
      AntichainDecomposition parts;
      if (t.contains("parts")) {
        parts = decomposition_from_json(order, t["parts"]);
      } else {
        for (const auto& level : mirsky_decompose(order).parts) {
          const Subset p = level & nodes;
          if (!p.empty()) parts.parts.push_back(p);
        }
      }
      out.push_back(SystemTree{nodes, std::move(order), std::move(parts)});
    } catch (const DomainError& e) {
      throw ParseError(std::string("tree: ") + e.what());
    }
  }
  return IntervalSystem(universe, std::move(out), reading, cap);
}

json cone_point_to_json(const IndexSet& gamma, const ConePoint& p) {
  return json{{"scale", rational_to_json(p.scale)}, {"subset", labels_to_json(gamma, p.subset)}};
}

ConePoint cone_point_from_json(const IndexSet& gamma, const json& j) {
  require_keys(j, {"scale", "subset"}, "point");
  try {
    return make_cone_point(rational_from_json(at(j, "scale", "point")), subset_from_json(gamma, at(j, "subset", "point")));
  } catch (const DomainError& e) {
    throw ParseError(std::string("point: ") + e.what());
  }
}

json rho_to_json(const RhoFunction& rho) {
  json points = json::array();
  json values = json::array();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    points.push_back(cone_point_to_json(*rho.gamma(), rho.point(i)));
    values.push_back(rational_to_json(rho.value(i)));
  }
  return json{{"gamma", labels_json(*rho.gamma())},
              {"range_max", rational_to_json(rho.range_max())},
              {"points", points},
              {"values", values}};
}

RhoFunction rho_from_json(const json& j) {
  require_keys(j, {"gamma", "range_max", "points", "values"}, "rho");
  auto gamma = gamma_from(at(j, "gamma", "rho"), "rho.gamma");
  const json& pts = at(j, "points", "rho");
  const json& vals = at(j, "values", "rho");
  if (!pts.is_array() || !vals.is_array()) throw ParseError("rho: points and values must be arrays");
  std::vector<ConePoint> points;
  std::vector<Rational> values;
  for (const auto& p : pts) points.push_back(cone_point_from_json(*gamma, p));
  for (const auto& v : vals) values.push_back(rational_from_json(v));
  const Rational range = j.contains("range_max") ? rational_from_json(j["range_max"]) : Rational(1);
  try {
    return RhoFunction(gamma, std::move(points), std::move(values), range);
  } catch (const DomainError& e) {
    throw ParseError(std::string("rho: ") + e.what());
  }
}

json certificate_to_json(const FragmentationCertificate& c) {
  json entries = json::array();
  const IndexSet& gamma = *c.rho.gamma();
  for (const auto& e : c.entries) {
    json je{{"chosen", e.chosen},
            {"coordinates", labels_to_json(gamma, e.coordinates)},
            {"slice", e.slice},
            {"diameter", rational_to_json(e.diameter)}};
    if (c.mode == FragmentMode::exhaustive) {
      je["subset_mask"] = e.subset_mask;
    } else {
      je["step"] = e.step;
    }
    entries.push_back(std::move(je));
  }
  return json{{"kind", "fragmentation"},
              {"mode", to_string(c.mode)},
              {"epsilon", rational_to_json(c.epsilon)},
              {"rho", rho_to_json(c.rho)},
              {"entries", entries}};
}

FragmentationCertificate certificate_from_json(const json& j) {
  require_keys(j, {"kind", "mode", "epsilon", "rho", "entries"}, "certificate");
  if (at(j, "kind", "certificate") != "fragmentation") throw ParseError("certificate: kind must be \"fragmentation\"");
  const json& mode = at(j, "mode", "certificate");
  FragmentMode m;
  if (mode == "exhaustive") {
    m = FragmentMode::exhaustive;
  } else if (mode == "scheme") {
    m = FragmentMode::scheme;
  } else {
    throw ParseError("certificate: mode must be \"exhaustive\" or \"scheme\"");
  }
  FragmentationCertificate c{m, rational_from_json(at(j, "epsilon", "certificate")),
                             rho_from_json(at(j, "rho", "certificate")), {}};
  const IndexSet& gamma = *c.rho.gamma();
  const json& entries = at(j, "entries", "certificate");
  if (!entries.is_array()) throw ParseError("certificate: entries must be an array");
  for (const auto& je : entries) {
    require_keys(je, {"chosen", "coordinates", "slice", "diameter", "subset_mask", "step"}, "certificate entry");
    FragmentEntry e;
    try {
      e.chosen = at(je, "chosen", "entry").get<std::size_t>();
      e.slice = at(je, "slice", "entry").get<std::vector<std::size_t>>();
      if (m == FragmentMode::exhaustive) {
        e.subset_mask = at(je, "subset_mask", "entry").get<std::uint64_t>();
      } else {
        e.step = at(je, "step", "entry").get<std::size_t>();
      }
    } catch (const json::type_error& err) {
      throw ParseError(std::string("certificate entry: ") + err.what());
    }
    e.coordinates = subset_from_json(gamma, at(je, "coordinates", "entry"));
    e.diameter = rational_from_json(at(je, "diameter", "entry"));
    c.entries.push_back(std::move(e));
  }
  return c;
}

json violation_to_json(const IndexSet& gamma, const ViolationWitness& w) {
  json pts = json::array();
  json vals = json::array();
  for (const auto& p : w.points) pts.push_back(cone_point_to_json(gamma, p));
  for (const auto& v : w.values) vals.push_back(rational_to_json(v));
  return json{{"kind", to_string(w.kind)}, {"points", pts}, {"values", vals}, {"detail", w.detail}};
}

json star_witness_to_json(const RhoFunction& rho, const StarWitness& w) {
  const IndexSet& g = *rho.gamma();
  return json{{"y", cone_point_to_json(g, rho.point(w.lower))},
              {"x", cone_point_to_json(g, rho.point(w.upper))},
              {"coordinates", labels_to_json(g, w.coordinates)},
              {"region_sup", rational_to_json(w.region_sup)},
              {"alpha", rational_to_json(w.alpha)},
              {"construction", w.construction}};
}

json scale_witness_to_json(const ScaledCone& cone, const ScaleStarWitness& w) {
  const IndexSet& g = *cone.sigma.gamma();
  json out{{"case", std::string(1, w.which)}, {"beta", rational_to_json(w.beta)}, {"verified", w.verified}};
  if (w.which == 'a') {
    out["coordinate"] = g.label(w.coordinate);
    out["coordinate_bound"] = rational_to_json(w.coordinate_bound);
  } else {
    out["scale_bound"] = rational_to_json(w.scale_bound);
    if (w.inner) out["inner"] = star_witness_to_json(cone.base, *w.inner);
  }
  if (w.violation) out["violation"] = violation_to_json(g, *w.violation);
  return out;
}

json reznichenko_witness_to_json(const IntervalSystem& s, const ReznichenkoWitness& w) {
  const IndexSet& u = *s.universe();
  json out{{"I", labels_to_json(u, w.upper)},
           {"J", labels_to_json(u, w.lower)},
           {"t", u.label(w.t)},
           {"m", w.m},
           {"alpha", rational_to_json(w.alpha)},
           {"verified", w.verified}};
  if (w.offending) out["offending"] = labels_to_json(u, *w.offending);
  if (w.violation) out["violation"] = violation_to_json(u, *w.violation);
  return out;
}

json midpoint_witness_to_json(const MidpointWitness& w) {
  return json{{"x", vector_to_json(w.x)},
              {"y", vector_to_json(w.y)},
              {"value_x", rational_to_json(w.value_x)},
              {"value_y", rational_to_json(w.value_y)},
              {"value_mid", rational_to_json(w.value_mid)},
              {"squared", w.squared},
              {"deficiency", rational_to_json(w.deficiency)}};
}

json lattice_witness_to_json(const LatticeWitness& w) {
  return json{{"x", vector_to_json(w.x)},
              {"y", vector_to_json(w.y)},
              {"value_x", rational_to_json(w.value_x)},
              {"value_y", rational_to_json(w.value_y)}};
}

}  // namespace renormlab::io
