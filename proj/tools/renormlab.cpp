#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "renormlab/app.hpp"
#include "renormlab/certificate.hpp"
#include "renormlab/errors.hpp"
#include "renormlab/json_io.hpp"

namespace fs = std::filesystem;
using namespace renormlab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

/// "l1", "linf", "day", "lp:P", "troyanski" (over ℓ∞), "adequate"/"troyanski-adequate"
/// (over `family`), inline JSON, or "@file.json".
NormOracle parse_norm(const std::string& spec, const SetFamily* family) {
  if (spec == "l1") return NormOracle::l1();
  if (spec == "linf") return NormOracle::linf();
  if (spec == "day") return NormOracle::day();
  if (spec == "troyanski") return NormOracle::troyanski(NormOracle::linf());
  if (spec.rfind("lp:", 0) == 0) {
    try {
      return NormOracle::lp(std::stod(spec.substr(3)));
    } catch (const std::invalid_argument&) {
      throw UsageError("--norm: bad exponent in '" + spec + "'");
    }
  }
  if (spec == "adequate" || spec == "troyanski-adequate") {
    if (!family) throw UsageError("--norm " + spec + " needs an instance family");
    const SetFamily f = validate_adequate(*family).is_adequate ? *family : downward_close(*family);
    const NormOracle a = NormOracle::adequate(f);
    return spec == "adequate" ? a : NormOracle::troyanski(a);
  }
  if (!spec.empty() && spec[0] == '@') return io::norm_from_json(io::read_json_file(spec.substr(1)));
  if (!spec.empty() && spec[0] == '{') return io::norm_from_json(io::parse_json(spec));
  throw UsageError("--norm: unknown spec '" + spec + "'");
}

/// Fills options the user did not pass on the command line from a strict JSON config.
class Config {
 public:
  Config(const std::string& path, std::initializer_list<const char*> allowed) {
    if (path.empty()) return;
    j_ = io::read_json_file(path);
    if (!j_.is_object()) throw ParseError("config: expected an object");
    io::require_keys(j_, allowed, "config");
  }

  template <class T>
  void apply(CLI::App& app, const char* key, T& target) const {
    if (!j_.contains(key) || app.get_option(std::string("--") + key)->count() > 0) return;
    try {
      target = j_[key].get<T>();
    } catch (const json::exception&) {
      throw ParseError(std::string("config.") + key + ": wrong type");
    }
  }

 private:
  json j_ = json::object();
};

Rational parse_epsilon(const std::string& s) {
  const Rational e = parse_rational(s);
  if (e <= 0) throw UsageError("--epsilon must be positive");
  return e;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string artifact_path(const std::string& base, const std::string& name) {
  fs::path p(base);
  std::string stem = p.filename().string();
  if (stem.size() > 5 && stem.ends_with(".json")) stem.resize(stem.size() - 5);
  return (p.parent_path() / (stem + "." + name + ".cert.json")).string();
}

std::vector<Rational> parse_q(const std::string& text) {
  std::vector<Rational> q;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) q.push_back(parse_rational(item));
  return q;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  app::GenParams p;
  std::string q;
  std::string reading = "chain";
  std::string out;
  std::string config;
};

int run_gen(CLI::App& cmd, GenArgs& a) {
  Config cfg(a.config, {"seed", "nodes", "n", "max-phi", "trees", "members", "q", "cap", "reading", "out"});
  cfg.apply(cmd, "seed", a.p.seed);
  cfg.apply(cmd, "nodes", a.p.nodes);
  cfg.apply(cmd, "n", a.p.n);
  cfg.apply(cmd, "max-phi", a.p.max_phi);
  cfg.apply(cmd, "trees", a.p.trees);
  cfg.apply(cmd, "members", a.p.members);
  cfg.apply(cmd, "q", a.q);
  cfg.apply(cmd, "cap", a.p.cap);
  cfg.apply(cmd, "reading", a.reading);
  cfg.apply(cmd, "out", a.out);
  if (a.reading == "vacuous") {
    a.p.reading = IntervalReading::vacuous;
  } else if (a.reading != "chain") {
    throw UsageError("--reading must be chain or vacuous");
  }
  if (a.kind == "sigmaq") a.p.q = parse_q(a.q);
  write_text(a.out, io::dump(app::generate(a.kind, a.p)));
  return kExitPass;
}

struct VerifyArgs {
  std::string instance;
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  std::string epsilon = "1/4";
  std::size_t cap_subsets = 0;
  std::size_t cap_family = 0;
  std::size_t samples = 200;
  std::string norm;
  std::string format = "json";
  std::string out;
  std::string config;
  bool compare_mode = false;
};

int run_verify(CLI::App& cmd, VerifyArgs& a) {
  Config cfg(a.config, {"seed", "epsilon", "suite", "cap-subsets", "cap-family", "samples", "norm", "format", "out",
                        "compare-mode"});
  cfg.apply(cmd, "seed", a.seed);
  cfg.apply(cmd, "epsilon", a.epsilon);
  cfg.apply(cmd, "suite", a.suites);
  cfg.apply(cmd, "cap-subsets", a.cap_subsets);
  cfg.apply(cmd, "cap-family", a.cap_family);
  cfg.apply(cmd, "samples", a.samples);
  cfg.apply(cmd, "norm", a.norm);
  cfg.apply(cmd, "format", a.format);
  cfg.apply(cmd, "out", a.out);
  cfg.apply(cmd, "compare-mode", a.compare_mode);
  if (a.suites.empty()) a.suites = {"all"};
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");

  app::VerifyOptions opt;
  opt.caps = app::caps_from_env({});
  if (a.cap_subsets) opt.caps.subsets = a.cap_subsets;
  if (a.cap_family) opt.caps.family = a.cap_family;
  opt.seed = a.seed;
  opt.epsilon = parse_epsilon(a.epsilon);
  opt.samples = a.samples;
  const app::Instance inst = app::load_instance(io::read_json_file(a.instance), opt.caps);
  if (!a.norm.empty()) opt.norm = parse_norm(a.norm, &inst.k());

  app::VerifyResult res = app::verify(inst, a.suites, opt);
  const std::string base = a.out.empty() || a.out == "-" ? a.instance : a.out;
  for (const auto& art : res.artifacts) {
    const std::string path = artifact_path(base, art.name);
    write_text(path, io::dump(art.content));
    for (auto& suite : res.report["suites"]) {
      for (auto& c : suite["checks"]) {
        if (c["details"].value("certificate", "") == art.name) c["details"]["certificate"] = fs::path(path).filename().string();
      }
    }
  }
  if (!a.compare_mode) res.report["metadata"] = json{{"generated_at", timestamp()}, {"instance_path", a.instance}};
  if (a.format == "csv") {
    write_text(a.out, app::lur_csv(res.lur_rows));
  } else {
    write_text(a.out, io::dump(res.report));
  }
  return res.pass ? kExitPass : kExitViolation;
}

int run_verify_certificate(const std::string& path, const std::string& out) {
  const FragmentationCertificate c = io::certificate_from_json(io::read_json_file(path));
  const CertificateCheck chk = validate_certificate(c);
  json rep{{"valid", chk.valid}, {"entries_checked", chk.entries_checked}, {"errors", chk.errors}};
  write_text(out, io::dump(rep));
  return chk.valid ? kExitPass : kExitViolation;
}

struct BallArgs {
  std::string norm = "day";
  std::size_t dim = 2;
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t samples = 64;
  std::string out;
};

int run_ball(const BallArgs& a) {
  const NormOracle n = parse_norm(a.norm, nullptr);
  write_text(a.out, app::ball_csv(n, IndexSet::numbered(a.dim), a.i, a.j, a.samples));
  return kExitPass;
}

int run_norm(const std::string& spec, const std::string& vectors, const std::string& out) {
  const NormOracle n = parse_norm(spec, nullptr);
  std::ifstream in(vectors);
  if (!in) throw UsageError("cannot open '" + vectors + "'");
  std::string line;
  std::size_t lineno = 0;
  std::string result;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json row;
    try {
      const LatticeVector x = io::vector_from_json(io::parse_json(line));
      row = json{{"line", lineno}, {"norm", n.name()}};
      if (n.flags().is_exact) {
        row["value"] = to_string(n.evaluate(x));
        row["squared"] = n.flags().value_is_squared;
      } else {
        row["float"] = n.evaluate_float(x);
        row["inexact"] = true;
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
    result += row.dump() + "\n";
  }
  write_text(out, result);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"renormlab: exact renorming constructions and their checks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance file");
  g->add_option("kind", gen.kind, "tree | pseudotree | phi | intervals | sigmaq | family")
      ->required()
      ->check(CLI::IsMember({"tree", "pseudotree", "phi", "intervals", "sigmaq", "family"}));
  g->add_option("--seed", gen.p.seed);
  g->add_option("--nodes", gen.p.nodes, "tree / per-tree node count");
  g->add_option("--n", gen.p.n, "phi size or family ground size");
  g->add_option("--max-phi", gen.p.max_phi);
  g->add_option("--trees", gen.p.trees);
  g->add_option("--members", gen.p.members, "random seeds of the family before closure");
  g->add_option("--q", gen.q, "comma-separated rationals for sigmaq");
  g->add_option("--cap", gen.p.cap, "sigmaq node cap");
  g->add_option("--reading", gen.reading, "chain | vacuous (intervals)");
  g->add_option("--out", gen.out);
  g->add_option("--config", gen.config);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run verification suites on an instance");
  v->add_option("instance", ver.instance)->required();
  v->add_option("--suite", ver.suites, "adequate | rho | star | fragment | scale | norms | convexity | all")
      ->check(CLI::IsMember({"adequate", "rho", "star", "fragment", "scale", "norms", "convexity", "all"}));
  v->add_option("--seed", ver.seed);
  v->add_option("--epsilon", ver.epsilon);
  v->add_option("--cap-subsets", ver.cap_subsets)->check(CLI::PositiveNumber);
  v->add_option("--cap-family", ver.cap_family)->check(CLI::PositiveNumber);
  v->add_option("--samples", ver.samples)->check(CLI::PositiveNumber);
  v->add_option("--norm", ver.norm, "l1 | linf | day | lp:P | troyanski | adequate | troyanski-adequate | JSON | @file");
  v->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv"}));
  v->add_option("--out", ver.out);
  v->add_option("--config", ver.config);
  v->add_flag("--compare-mode", ver.compare_mode, "omit the metadata block");

  std::string cert_path, cert_out;
  auto* vc = app.add_subcommand("verify-certificate", "Re-check a fragmentation certificate");
  vc->add_option("certificate", cert_path)->required();
  vc->add_option("--out", cert_out);

  BallArgs ball;
  auto* b = app.add_subcommand("ball", "Unit-sphere cross-section as CSV");
  b->add_option("--norm", ball.norm);
  b->add_option("--dim", ball.dim);
  b->add_option("--i", ball.i);
  b->add_option("--j", ball.j);
  b->add_option("--samples", ball.samples)->check(CLI::PositiveNumber);
  b->add_option("--out", ball.out);

  std::string norm_spec, norm_vectors, norm_out;
  auto* nm = app.add_subcommand("norm", "Evaluate a norm on JSON-lines vectors");
  nm->add_option("--norm", norm_spec)->required();
  nm->add_option("vectors", norm_vectors)->required();
  nm->add_option("--out", norm_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*g) return run_gen(*g, gen);
    if (*v) return run_verify(*v, ver);
    if (*vc) return run_verify_certificate(cert_path, cert_out);
    if (*b) return run_ball(ball);
    if (*nm) return run_norm(norm_spec, norm_vectors, norm_out);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
