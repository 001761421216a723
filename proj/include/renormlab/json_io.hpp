#pragma once

#include <string>

#include "json.hpp"

#include "renormlab/certificate.hpp"
#include "renormlab/convexity.hpp"
#include "renormlab/families.hpp"
#include "renormlab/intervals.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/norms.hpp"
#include "renormlab/phi.hpp"
#include "renormlab/pseudotree.hpp"
#include "renormlab/rho.hpp"

namespace renormlab::io {

using nlohmann::json;

/// Parses text; syntax errors become ParseError with the 1-based line.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);
/// Two-space indent, trailing newline.
std::string dump(const json& j);

json rational_to_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json& j);

json labels_to_json(const IndexSet& set, const Subset& s);
Subset subset_from_json(const IndexSet& set, const json& j);

/// {"gamma": [...], "entries": {"a": "3/2"}}
json vector_to_json(const LatticeVector& x);
LatticeVector vector_from_json(const json& j);
/// Same, with a known gamma (the "gamma" key is then optional but must match when present).
LatticeVector vector_from_json(const json& j, const IndexSetPtr& gamma);

/// {"gamma": [...], "members": [["a"], ...], "provenance": "explicit"}
json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);

/// {"kind": "adequate", "family": ...}, {"kind": "day"}, {"kind": "troyanski", "base": ...},
/// {"kind": "lp", "p": "1" | "inf" | number}
json norm_to_json(const NormOracle& n);
NormOracle norm_from_json(const json& j);

/// {"nodes": [...], "less_than": [["a", "b"], ...]}
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);
json decomposition_to_json(const Poset& p, const AntichainDecomposition& d);
AntichainDecomposition decomposition_from_json(const Poset& p, const json& j);

/// {"n": 5, "phi": {"0,1": 1, ...}}
json phi_to_json(const PhiInstance& inst);
PhiInstance phi_from_json(const json& j);

/// {"reading": "chain", "trees": [{"nodes": [...], "less_than": [...], "parts": [[...], ...]}, ...]}
json intervals_to_json(const IntervalSystem& s);
IntervalSystem intervals_from_json(const json& j, std::size_t cap = kDefaultFamilyCap);

json cone_point_to_json(const IndexSet& gamma, const ConePoint& p);
ConePoint cone_point_from_json(const IndexSet& gamma, const json& j);
/// {"gamma": [...], "range_max": "1", "points": [{"scale": "1", "subset": [...]}], "values": [...]}
json rho_to_json(const RhoFunction& rho);
RhoFunction rho_from_json(const json& j);

json certificate_to_json(const FragmentationCertificate& c);
FragmentationCertificate certificate_from_json(const json& j);

json violation_to_json(const IndexSet& gamma, const ViolationWitness& w);
json star_witness_to_json(const RhoFunction& rho, const StarWitness& w);
json scale_witness_to_json(const ScaledCone& cone, const ScaleStarWitness& w);
json reznichenko_witness_to_json(const IntervalSystem& s, const ReznichenkoWitness& w);
json midpoint_witness_to_json(const MidpointWitness& w);
json lattice_witness_to_json(const LatticeWitness& w);

/// Rejects keys of `j` outside `allowed` (ParseError naming the first offender).
void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* what);

}  // namespace renormlab::io
