#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "renormlab/convexity.hpp"
#include "renormlab/families.hpp"
#include "renormlab/intervals.hpp"
#include "renormlab/norms.hpp"
#include "renormlab/phi.hpp"
#include "renormlab/pseudotree.hpp"
#include "renormlab/rho.hpp"

// Instance loading, generation and the verification suites shared by the CLI,
// the acceptance harness and the Python module.
namespace renormlab::app {

using nlohmann::json;

struct Caps {
  std::size_t subsets = kDefaultSubsetCap;
  std::size_t family = kDefaultFamilyCap;
};

/// Applies RENORMLAB_CAPS ("subsets=N,family=M", either key optional) on top of `base`.
/// Malformed values throw ParseError.
Caps caps_from_env(Caps base);
Caps parse_caps(const std::string& text, Caps base);

/// ρ(1_A) = |||1_A|||² / max_B |||1_B|||² with ||| ||| the Troyanski norm over the
/// adequate norm of (the downward closure of) the family.
RhoFunction troyanski_indicator_rho(const SetFamily& family, const Caps& caps = {});

/// A parsed instance file: {"kind": ..., "generator": {...}, "instance": {...}}.
struct Instance {
  std::string kind;  // family, tree, pseudotree, sigmaq, phi, intervals, rho
  json generator;
  std::optional<SetFamily> family;
  std::optional<Poset> poset;
  std::optional<PhiInstance> phi;
  std::optional<IntervalSystem> intervals;
  std::optional<RhoFunction> rho;

  const SetFamily& k() const { return *family; }
  const RhoFunction& rho_fn() const { return *rho; }
};

Instance load_instance(const json& j, const Caps& caps = {});

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t nodes = 8;
  std::size_t n = 6;
  unsigned long max_phi = 4;
  std::size_t trees = 3;
  std::size_t members = 4;
  std::vector<Rational> q;
  std::size_t cap = 4096;
  IntervalReading reading = IntervalReading::chain;
};

/// kind ∈ {tree, pseudotree, phi, intervals, sigmaq, family}; DomainError otherwise.
json generate(const std::string& kind, const GenParams& params);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"adequate", "rho", "star", "fragment", "scale", "norms", "convexity"};
  return names;
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  Caps caps;
  Rational epsilon{1, 4};
  /// Norm for the norms/convexity suites; default Troyanski over the adequate norm of K.
  std::optional<NormOracle> norm;
  std::size_t samples = 200;
};

struct Artifact {
  std::string name;
  json content;
};

struct VerifyResult {
  json report;
  bool pass = true;
  std::vector<Artifact> artifacts;
  /// LUR rows from the convexity suite, for CSV output.
  std::vector<LurRow> lur_rows;
};

/// `suites` entries from suite_names() or "all". Unknown names throw DomainError.
/// ResourceError propagates.
VerifyResult verify(const Instance& instance, const std::vector<std::string>& suites, const VerifyOptions& options);

/// Header "delta,max_distance,count".
std::string lur_csv(const std::vector<LurRow>& rows);

/// Unit-sphere cross-section in the plane of coordinates (i, j): `samples` rows
/// "theta,x,y" with (x, y) = (cos θ, sin θ)/‖cos θ e_i + sin θ e_j‖.
std::string ball_csv(const NormOracle& norm, const IndexSetPtr& gamma, std::size_t i, std::size_t j,
                     std::size_t samples);

}  // namespace renormlab::app
