#include "renormlab/app.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "renormlab/certificate.hpp"
#include "renormlab/convexity.hpp"
#include "renormlab/errors.hpp"
#include "renormlab/generators.hpp"
#include "renormlab/json_io.hpp"

namespace renormlab::app {

namespace {

constexpr std::size_t kStoredWitnesses = 50;

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || v == 0) throw ParseError(std::string(what) + ": expected a positive integer");
  return static_cast<std::size_t>(v);
}

class Checks {
 public:
  void add(const std::string& name, const std::string& anchor, const std::string& status, json details) {
    if (status == "fail") pass_ = false;
    checks_.push_back(json{{"check", name}, {"anchor", anchor}, {"result", status}, {"details", std::move(details)}});
  }
  bool pass() const { return pass_; }
  json take() { return std::move(checks_); }

 private:
  json checks_ = json::array();
  bool pass_ = true;
};

const char* status(bool ok) { return ok ? "pass" : "fail"; }

bool is_poset_kind(const std::string& k) { return k == "tree" || k == "pseudotree" || k == "sigmaq"; }

SetFamily closed_family(const SetFamily& f, const Caps& caps) {
  return validate_adequate(f).is_adequate ? f : downward_close(f, caps.family);
}

NormOracle default_norm(const Instance& inst, const Caps& caps) {
  TroyanskiOptions opt;
  opt.subset_cap = caps.subsets;
  return NormOracle::troyanski(NormOracle::adequate(closed_family(inst.k(), caps)), opt);
}

json subset_json(const IndexSet& g, const Subset& s) { return io::labels_to_json(g, s); }

// ---------------------------------------------------------------------------

void suite_adequate(const Instance& inst, const VerifyOptions& opt, Checks& out) {
  const SetFamily& f = inst.k();
  if (inst.kind == "intervals") {
    out.add("adequate-family", "", "skip", json{{"note", "interval families are not closed under subsets"}});
    return;
  }
  const AdequacyReport rep = validate_adequate(f);
  json viol = json::array();
  for (const auto& v : rep.violations) viol.push_back(json{{"rule", v.rule}, {"set", subset_json(f.ground(), v.witness)}});
  out.add("adequate-family", "", status(rep.is_adequate), json{{"violations", viol}, {"note", rep.note}});
  if (!rep.is_adequate) return;

  if (f.ground().size() <= 10) {
    const NormOracle n = NormOracle::adequate(f);
    std::size_t checked = 0;
    json bad = nullptr;
    for (const auto& a : f.members()) {
      if (a.empty()) continue;
      ++checked;
      const Rational v = dual_norm(n, indicator_functional(f.ground_ptr(), a));
      if (v != 1 && bad.is_null()) bad = json{{"set", subset_json(f.ground(), a)}, {"value", to_string(v)}};
    }
    out.add("functional-norm", "‖1_A^*‖_𝒜 = 1", status(bad.is_null()), json{{"members", checked}, {"counterexample", bad}});
  } else {
    out.add("functional-norm", "‖1_A^*‖_𝒜 = 1", "skip", json{{"note", "ground set above 10 atoms"}});
  }

  Rng rng(opt.seed);
  std::size_t violations = 0;
  json first = nullptr;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const LatticeVector x = random_vector(f.ground_ptr(), rng);
    const Rational n = adequate_norm(f, x);
    const Rational t = sup_abs(t_embed(f, x));
    if (!(n / 2 <= t && t <= n)) {
      ++violations;
      if (first.is_null()) first = json{{"x", io::vector_to_json(x)}, {"norm", to_string(n)}, {"sup", to_string(t)}};
    }
  }
  out.add("embedding-inequality", "½‖x‖_𝒜 ≤ ‖Tx‖_∞ ≤ ‖x‖_𝒜", status(violations == 0),
          json{{"samples", opt.samples}, {"violations", violations}, {"counterexample", first}});
}

void suite_rho(const Instance& inst, const VerifyOptions& opt, Checks& out) {
  const RhoFunction& rho = inst.rho_fn();
  const MonotonicityReport mono = check_strictly_increasing(rho);
  json d{{"points", rho.size()}, {"comparable_pairs", mono.comparable_pairs}};
  const IndexSet& g = *rho.gamma();
  if (mono.violation) d["violation"] = io::violation_to_json(g, *mono.violation);
  out.add("strictly-increasing", "ρ(y) < ρ(x) for y < x", status(mono.pass), d);

  if (rho.is_meet_closed()) {
    const auto sym = check_symmetric_axiom(rho);
    json sd{{"points", rho.size()}};
    if (sym) sd["violation"] = io::violation_to_json(g, *sym);
    out.add("symmetric-axiom", "max{ρ(x),ρ(y)} − ρ(x ∧ y)", status(!sym), sd);
  } else {
    out.add("symmetric-axiom", "max{ρ(x),ρ(y)} − ρ(x ∧ y)", "skip", json{{"note", "domain not meet-closed"}});
  }

  if (is_poset_kind(inst.kind) && mono.pass) {
    const Poset& p = *inst.poset;
    const SigmaFromRho s = sigma_from_rho(p, rho);
    json vals = json::object();
    for (std::size_t x = 0; x < p.size(); ++x) vals[p.nodes().label(x)] = to_string(s.sigma[x]);
    out.add("sigma-from-rho", "pick σ(x) ∈ (ρ(1_{I_x}), ρ(1_{I_x ∪ {x}}))",
            status(s.strictly_increasing && s.fibers_antichain),
            json{{"sigma", vals}, {"strictly_increasing", s.strictly_increasing}, {"fibers_antichain", s.fibers_antichain}});

    const AntichainDecomposition dec = mirsky_decompose(p);
    const std::string err = check_decomposition(p, dec);
    const std::size_t longest = longest_chain_length(p);
    out.add("mirsky-decomposition", "", status(err.empty() && dec.part_count() == longest),
            json{{"parts", io::decomposition_to_json(p, dec)}, {"longest_chain", longest}, {"error", err}});

    const EberleinEmbedding e = eberlein_embed(p, dec, opt.caps.family);
    out.add("eberlein-embedding", "2^{-n} if A ∩ Γ_n = {x}", status(e.injective && e.order_compatible),
            json{{"chains", e.chains.size()}, {"injective", e.injective}, {"order_compatible", e.order_compatible}});
  }

  if (inst.kind == "phi") {
    const PhiInstance& ph = *inst.phi;
    std::size_t bad = 0;
    json first = nullptr;
    for (const auto& a : inst.k().members()) {
      const auto el = a.elements();
      for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = i + 1; j < el.size(); ++j) {
          if (ph.phi(el[i], el[j]) < j + 1) {
            ++bad;
            if (first.is_null()) first = subset_json(inst.k().ground(), a);
          }
        }
      }
    }
    out.add("position-bound", "Φ(ξ_i, ξ_j) ≥ j for all i < j", status(bad == 0),
            json{{"members", inst.k().size()}, {"violations", bad}, {"counterexample", first}});
  }
}

void suite_star(const Instance& inst, const VerifyOptions&, Checks& out) {
  const RhoFunction& rho = inst.rho_fn();
  const StarReport rep = star_check(rho);
  json ws = json::array();
  for (std::size_t i = 0; i < rep.witnesses.size() && i < kStoredWitnesses; ++i) {
    ws.push_back(io::star_witness_to_json(rho, rep.witnesses[i]));
  }
  json d{{"witness_count", rep.witnesses.size()}, {"witnesses", ws}, {"note", rep.note}};
  if (rep.violation) d["violation"] = io::violation_to_json(*rho.gamma(), *rep.violation);
  out.add("star-property", "α = ρ(A∖{γ}), U = {1_C : γ ∉ C}", status(rep.pass), d);

  if (inst.kind != "intervals") return;
  const IntervalSystem& s = *inst.intervals;
  const auto& members = inst.k().members();
  std::size_t pairs = 0;
  std::size_t failures = 0;
  json stored = json::array();
  json failed = json::array();
  for (const auto& i : members) {
    for (const auto& j : members) {
      if (!j.is_proper_subset_of(i)) continue;
      ++pairs;
      const ReznichenkoWitness w = reznichenko_star_witness(s, i, j);
      if (!w.verified) {
        ++failures;
        if (failed.size() < kStoredWitnesses) failed.push_back(io::reznichenko_witness_to_json(s, w));
      } else if (stored.size() < kStoredWitnesses) {
        stored.push_back(io::reznichenko_witness_to_json(s, w));
      }
    }
  }
  const bool vacuous = s.reading() == IntervalReading::vacuous;
  std::string st = status(failures == 0);
  if (vacuous && failures > 0) st = "reported";
  out.add("interval-witness", "α = ρ(1_I) − 2^{-(m+1)}", st,
          json{{"reading", to_string(s.reading())},
               {"pairs", pairs},
               {"unverified", failures},
               {"witnesses", stored},
               {"violations", failed}});
}

void suite_fragment(const Instance& inst, const VerifyOptions& opt, Checks& out, std::vector<Artifact>& artifacts) {
  const RhoFunction& rho = inst.rho_fn();
  const FragmentMode mode = rho.size() <= kExhaustiveFragmentLimit ? FragmentMode::exhaustive : FragmentMode::scheme;
  const FragmentResult r = fragment(rho, opt.epsilon, mode);
  const std::string anchor = "d(y,z) ≤ α − ρ(y ∧ z)";
  if (!r.certificate) {
    json d{{"epsilon", to_string(opt.epsilon)}, {"mode", to_string(mode)}};
    if (r.violation) d["violation"] = io::violation_to_json(*rho.gamma(), *r.violation);
    out.add("fragmentation", anchor, "fail", d);
    return;
  }
  const FragmentationCertificate& c = *r.certificate;
  const CertificateCheck chk = validate_certificate(c);
  Rational widest(0);
  for (const auto& e : c.entries) widest = std::max(widest, e.diameter);
  const bool ok = chk.valid && widest < 2 * opt.epsilon;
  artifacts.push_back(Artifact{"fragment", io::certificate_to_json(c)});
  out.add("fragmentation", anchor, status(ok),
          json{{"epsilon", to_string(opt.epsilon)},
               {"mode", to_string(mode)},
               {"entries", c.entries.size()},
               {"max_diameter", to_string(widest)},
               {"validator", chk.valid},
               {"validator_errors", chk.errors},
               {"certificate", "fragment"}});
}

void suite_scale(const Instance& inst, const VerifyOptions&, Checks& out) {
  const RhoFunction& rho = inst.rho_fn();
  const std::string anchor = "σ(λ1_A) = λρ(A)";
  if (!rho.indicators_only() || !rho.is_meet_closed()) {
    out.add("scale-cone", anchor, "skip", json{{"note", "needs a meet-closed indicator domain"}});
    return;
  }
  if (!check_strictly_increasing(rho).pass) {
    out.add("scale-cone", anchor, "fail", json{{"note", "ρ is not strictly increasing"}});
    return;
  }
  const ScaledCone cone = scale_cone(rho);
  const MonotonicityReport mono = check_strictly_increasing(cone.sigma);
  json grid = json::array();
  for (const auto& g : cone.grid) grid.push_back(to_string(g));
  out.add("scale-cone", anchor, status(mono.pass),
          json{{"grid", grid}, {"points", cone.sigma.size()}, {"comparable_pairs", mono.comparable_pairs}});

  std::size_t case_a = 0, case_b = 0, failures = 0;
  json failed = json::array();
  json sample = json::array();
  const auto& pts = cone.sigma.points();
  for (std::size_t x = 0; x < pts.size(); ++x) {
    for (std::size_t y = 0; y < pts.size(); ++y) {
      if (compare(pts[y], pts[x]) != Order::less) continue;
      const ScaleStarWitness w = scale_star_witness(cone, pts[x], pts[y]);
      (w.which == 'a' ? case_a : case_b)++;
      if (!w.verified) {
        ++failures;
        if (failed.size() < kStoredWitnesses) failed.push_back(io::scale_witness_to_json(cone, w));
      } else if (sample.size() < kStoredWitnesses) {
        sample.push_back(io::scale_witness_to_json(cone, w));
      }
    }
  }
  out.add("scale-star", "β = ½(λ + μ)ρ(1_A)", status(failures == 0),
          json{{"case_a", case_a}, {"case_b", case_b}, {"unverified", failures}, {"witnesses", sample},
               {"violations", failed}});
}

void suite_norms(const Instance& inst, const VerifyOptions& opt, Checks& out) {
  const SetFamily& f = inst.k();
  const IndexSetPtr& g = f.ground_ptr();
  {
    Rng rng(opt.seed);
    const SetFamily singles = SetFamily::singletons(g);
    const bool small = g->size() <= 16;
    const std::optional<SetFamily> power = small ? std::optional<SetFamily>(SetFamily::powerset(g, opt.caps.family))
                                                 : std::nullopt;
    const NormOracle linf = NormOracle::linf();
    const NormOracle l1 = NormOracle::l1();
    std::size_t bad_inf = 0, bad_one = 0;
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const LatticeVector x = random_vector(g, rng);
      if (adequate_norm(singles, x) != linf.evaluate(x)) ++bad_inf;
      if (power && adequate_norm(*power, x) != l1.evaluate(x)) ++bad_one;
    }
    out.add("singleton-family", "λ_𝒜 = ℓ_∞(Γ)", status(bad_inf == 0), json{{"samples", opt.samples}, {"mismatches", bad_inf}});
    if (power) {
      out.add("powerset-family", "λ_𝒜 = ℓ_1(Γ)", status(bad_one == 0), json{{"samples", opt.samples}, {"mismatches", bad_one}});
    } else {
      out.add("powerset-family", "λ_𝒜 = ℓ_1(Γ)", "skip", json{{"note", "ground set above 16 atoms"}});
    }
  }

  const NormOracle tro = default_norm(inst, opt.caps);
  const LatticeCheck lat = strictly_lattice_check(tro, closed_family(f, opt.caps), opt.samples, opt.seed);
  json ld{{"norm", tro.name()}, {"indicator_pairs", lat.indicator_pairs}, {"random_pairs", lat.random_pairs}};
  if (lat.witness) ld["witness"] = io::lattice_witness_to_json(*lat.witness);
  out.add("strict-lattice", "|||x||| < |||y||| whenever |x| < |y|", status(lat.pass), ld);

  const EquivalenceConstants eq = equivalence_constants(tro.base(), tro, g, opt.samples, opt.seed);
  const bool finite = eq.low > 0 && std::isfinite(eq.high);
  out.add("equivalence", "", status(finite),
          json{{"low", eq.low}, {"high", eq.high}, {"samples", eq.samples}});

  if (opt.norm) {
    Rng rng(opt.seed);
    json vals = json::array();
    for (std::size_t s = 0; s < 5; ++s) {
      const LatticeVector x = random_vector(g, rng);
      json row{{"x", io::vector_to_json(x)}};
      if (opt.norm->flags().is_exact) {
        row["value"] = to_string(opt.norm->evaluate(x));
        row["squared"] = opt.norm->flags().value_is_squared;
      } else {
        row["float"] = opt.norm->evaluate_float(x);
      }
      vals.push_back(row);
    }
    out.add("evaluate", "", "reported", json{{"norm", opt.norm->name()}, {"values", vals}});
  }
}

void suite_convexity(const Instance& inst, const VerifyOptions& opt, Checks& out, std::vector<LurRow>& lur) {
  const IndexSetPtr& g = inst.k().ground_ptr();
  const NormOracle norm = opt.norm ? *opt.norm : default_norm(inst, opt.caps);
  const ConvexityProbe p = strict_convexity_probe(norm, g, opt.samples, opt.seed);
  json d{{"norm", norm.name()},
         {"samples", p.samples},
         {"min_deficiency", p.min_deficiency},
         {"deterministic_scan", p.deterministic_scan}};
  bool ok = !p.witness;
  if (p.witness) {
    d["witness"] = io::midpoint_witness_to_json(*p.witness);
    d["witness_rechecked"] = recheck_midpoint(norm, *p.witness);
  }
  out.add("strict-convexity", "x = y whenever ‖x‖ = ‖y‖ = ½‖x+y‖", status(ok), d);

  if (!norm.flags().is_exact) {
    out.add("lur-table", "", "skip", json{{"note", "float oracle"}});
    return;
  }
  lur = lur_table(norm, g, 30, opt.seed);
  json rows = json::array();
  for (const auto& r : lur) rows.push_back(json{{"delta", r.delta}, {"max_distance", r.max_distance}, {"count", r.count}});
  out.add("lur-table", "", "reported", json{{"rows", rows}, {"monotone", table_monotone(lur)}});
}

}  // namespace

Caps parse_caps(const std::string& text, Caps base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("caps: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "subsets") {
      base.subsets = parse_count(val, "caps.subsets");
    } else if (key == "family") {
      base.family = parse_count(val, "caps.family");
    } else {
      throw ParseError("caps: unknown key '" + key + "'");
    }
  }
  return base;
}

Caps caps_from_env(Caps base) {
  const char* env = std::getenv("RENORMLAB_CAPS");
  return env ? parse_caps(env, base) : base;
}

RhoFunction troyanski_indicator_rho(const SetFamily& family, const Caps& caps) {
  TroyanskiOptions opt;
  opt.subset_cap = caps.subsets;
  const NormOracle base = NormOracle::adequate(closed_family(family, caps));
  std::vector<Rational> raw;
  raw.reserve(family.size());
  Rational top(0);
  for (const auto& a : family.members()) {
    raw.push_back(troyanski_norm_sq(base, LatticeVector::indicator(family.ground_ptr(), a), opt));
    top = std::max(top, raw.back());
  }
  return RhoFunction::on_family(family, [&](const Subset& a) {
    const Rational& v = raw[family.position(a)];
    return top == 0 ? v : Rational(v / top);
  });
}

Instance load_instance(const json& j, const Caps& caps) {
  if (!j.is_object()) throw ParseError("instance file: expected an object");
  io::require_keys(j, {"kind", "generator", "instance"}, "instance file");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("instance file: missing string 'kind'");
  if (!j.contains("instance")) throw ParseError("instance file: missing 'instance'");
  Instance inst;
  inst.kind = j["kind"].get<std::string>();
  inst.generator = j.value("generator", json::object());
  const json& body = j["instance"];
  if (inst.kind == "family") {
    inst.family = io::family_from_json(body);
    inst.rho = troyanski_indicator_rho(*inst.family, caps);
  } else if (is_poset_kind(inst.kind)) {
    inst.poset = io::poset_from_json(body);
    const PseudotreeCheck pc = validate_pseudotree(*inst.poset);
    if (!pc.pass) {
      throw DomainError("instance: down-set of '" + inst.poset->nodes().label(*pc.witness) + "' is not a chain");
    }
    inst.family = chains_family(*inst.poset, caps.family);
    inst.rho = troyanski_indicator_rho(*inst.family, caps);
  } else if (inst.kind == "phi") {
    inst.phi = io::phi_from_json(body);
    inst.family = phi_family(*inst.phi, caps.family);
    inst.rho = phi_rho_function(*inst.phi, caps.family);
  } else if (inst.kind == "intervals") {
    inst.intervals = io::intervals_from_json(body, caps.family);
    inst.family = intervals_family(*inst.intervals);
    inst.rho = reznichenko_rho_function(*inst.intervals);
  } else if (inst.kind == "rho") {
    inst.rho = io::rho_from_json(body);
    std::vector<Subset> subsets;
    for (const auto& p : inst.rho->points()) subsets.push_back(p.subset);
    inst.family = SetFamily(inst.rho->gamma(), subsets);
  } else {
    throw ParseError("instance file: unknown kind '" + inst.kind + "'");
  }
  return inst;
}

json generate(const std::string& kind, const GenParams& p) {
  Rng rng(p.seed);
  json gen{{"command", kind}, {"seed", p.seed}};
  json body;
  if (kind == "tree" || kind == "pseudotree") {
    if (p.nodes == 0) throw DomainError("gen: --nodes must be positive");
    body = io::poset_to_json(random_tree(p.nodes, rng, kind == "pseudotree"));
    gen["nodes"] = p.nodes;
  } else if (kind == "phi") {
    if (p.max_phi == 0) throw DomainError("gen: --max-phi must be positive");
    body = io::phi_to_json(random_phi(p.n, p.max_phi, rng));
    gen["n"] = p.n;
    gen["max_phi"] = p.max_phi;
  } else if (kind == "intervals") {
    if (p.trees == 0 || p.nodes == 0) throw DomainError("gen: --trees and --nodes must be positive");
    body = io::intervals_to_json(random_interval_system(p.trees, p.nodes, rng, p.reading));
    gen["trees"] = p.trees;
    gen["nodes"] = p.nodes;
    gen["reading"] = to_string(p.reading);
  } else if (kind == "sigmaq") {
    if (p.q.empty()) throw DomainError("gen: --q needs at least one rational");
    body = io::poset_to_json(sigma_q_truncation(p.q, p.cap));
    json q = json::array();
    for (const auto& v : p.q) q.push_back(to_string(v));
    gen["q"] = q;
    gen["cap"] = p.cap;
    gen.erase("seed");
  } else if (kind == "family") {
    if (p.n == 0) throw DomainError("gen: --n must be positive");
    body = io::family_to_json(random_adequate_family(p.n, p.members, rng));
    gen["n"] = p.n;
    gen["members"] = p.members;
  } else {
    throw DomainError("gen: unknown kind '" + kind + "'");
  }
  return json{{"kind", kind}, {"generator", gen}, {"instance", body}};
}

VerifyResult verify(const Instance& inst, const std::vector<std::string>& suites, const VerifyOptions& opt) {
  std::vector<std::string> run;
  for (const auto& s : suites) {
    if (s == "all") {
      for (const auto& n : suite_names()) {
        if (std::find(run.begin(), run.end(), n) == run.end()) run.push_back(n);
      }
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw DomainError("unknown suite '" + s + "'");
    }
    if (std::find(run.begin(), run.end(), s) == run.end()) run.push_back(s);
  }
  VerifyResult res;
  json out = json::array();
  for (const auto& s : run) {
    Checks c;
    if (s == "adequate") suite_adequate(inst, opt, c);
    if (s == "rho") suite_rho(inst, opt, c);
    if (s == "star") suite_star(inst, opt, c);
    if (s == "fragment") suite_fragment(inst, opt, c, res.artifacts);
    if (s == "scale") suite_scale(inst, opt, c);
    if (s == "norms") suite_norms(inst, opt, c);
    if (s == "convexity") suite_convexity(inst, opt, c, res.lur_rows);
    res.pass = res.pass && c.pass();
    out.push_back(json{{"suite", s}, {"pass", c.pass()}, {"checks", c.take()}});
  }
  res.report = json{{"instance", json{{"kind", inst.kind}, {"generator", inst.generator}}},
                    {"options", json{{"seed", opt.seed},
                                     {"epsilon", to_string(opt.epsilon)},
                                     {"samples", opt.samples},
                                     {"cap_subsets", opt.caps.subsets},
                                     {"cap_family", opt.caps.family},
                                     {"norm", opt.norm ? io::norm_to_json(*opt.norm) : json(nullptr)}}},
                    {"suites", out},
                    {"pass", res.pass}};
  return res;
}

std::string lur_csv(const std::vector<LurRow>& rows) {
  std::string s = "delta,max_distance,count\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3g,%.12g,%zu\n", r.delta, r.max_distance, r.count);
    s += buf;
  }
  return s;
}

std::string ball_csv(const NormOracle& norm, const IndexSetPtr& gamma, std::size_t i, std::size_t j,
                     std::size_t samples) {
  if (i >= gamma->size() || j >= gamma->size() || i == j) throw DomainError("ball: need two distinct coordinates");
  if (samples == 0) throw DomainError("ball: samples must be positive");
  std::string s = "theta,x,y\n";
  char buf[128];
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    const double c = std::cos(th);
    const double sn = std::sin(th);
    const LatticeVector v = Rational(c) * LatticeVector::unit(gamma, i) + Rational(sn) * LatticeVector::unit(gamma, j);
    const double n = norm.evaluate_float(v);
    std::snprintf(buf, sizeof buf, "%.12f,%.15e,%.15e\n", th, c / n, sn / n);
    s += buf;
  }
  return s;
}

}  // namespace renormlab::app
