#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/rho.hpp"
#include "renormlab/subset.hpp"

namespace renormlab {

/// A finite strict partial order on an IndexSet. Construction closes the given
/// relation transitively and rejects cycles.
class Poset {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  Poset(IndexSetPtr nodes, const std::vector<Pair>& less_than);
  static Poset from_labels(std::vector<std::string> nodes,
                           const std::vector<std::pair<std::string, std::string>>& less_than);

  const IndexSet& nodes() const { return *nodes_; }
  const IndexSetPtr& nodes_ptr() const { return nodes_; }
  std::size_t size() const { return nodes_->size(); }

  bool less(std::size_t a, std::size_t b) const { return above_[a].contains(b); }
  bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }
  /// I_x = {w : w < x}.
  const Subset& below(std::size_t x) const { return below_.at(x); }
  const Subset& above(std::size_t x) const { return above_.at(x); }

  /// All pairs a < b, lexicographic.
  std::vector<Pair> relation() const;
  /// a < b with nothing strictly between.
  std::vector<Pair> covering_pairs() const;
  /// Linear extension: by |I_x|, then index.
  std::vector<std::size_t> topological_order() const;

  bool is_chain(const Subset& s) const;
  bool is_antichain(const Subset& s) const;

 private:
  IndexSetPtr nodes_;
  std::vector<Subset> below_;
  std::vector<Subset> above_;
};

struct PseudotreeCheck {
  bool pass = true;
  /// Node whose down-set is not a chain, with an incomparable pair inside it.
  std::optional<std::size_t> witness;
  std::optional<Poset::Pair> incomparable;
};

PseudotreeCheck validate_pseudotree(const Poset& p);

/// All chains, ∅ and singletons included. ResourceError past `cap` members.
SetFamily chains_family(const Poset& p, std::size_t cap = kDefaultFamilyCap);

/// max Σ_{v ∈ C} w_v over chains C; weights indexed by node, nonnegative.
Rational max_weight_chain(const Poset& p, const std::vector<Rational>& weights);

std::size_t longest_chain_length(const Poset& p);

/// parts[n-1] is Γ_n; part numbers are 1-based.
struct AntichainDecomposition {
  std::vector<Subset> parts;

  std::size_t part_count() const { return parts.size(); }
  /// 1-based part number holding `node`; 0 when uncovered.
  std::size_t part_of(std::size_t node) const;
};

/// Disjoint, covering, each part an antichain. Empty string when valid.
std::string check_decomposition(const Poset& p, const AntichainDecomposition& d);

/// Height level sets; part n holds the nodes whose longest chain ending there has n elements.
AntichainDecomposition mirsky_decompose(const Poset& p);

struct SigmaFromRho {
  std::vector<Rational> sigma;
  bool strictly_increasing = true;
  bool fibers_antichain = true;
};

/// σ(x) = simplest rational in (ρ(1_{I_x}), ρ(1_{I_x ∪ {x}})). Throws DomainError when
/// ρ is not strictly increasing or an interval is empty.
SigmaFromRho sigma_from_rho(const Poset& p, const RhoFunction& rho);

/// π(1_A)(x) = 2^{-n} when A ∩ Γ_n = {x}. DomainError if some part meets A twice.
LatticeVector eberlein_image(const AntichainDecomposition& d, const IndexSetPtr& nodes, const Subset& a);

struct EberleinEmbedding {
  SetFamily chains;
  std::vector<LatticeVector> images;
  bool injective = true;
  /// A ⊆ B ⟹ π(1_A) <= π(1_B) pointwise, over all member pairs.
  bool order_compatible = true;
};

EberleinEmbedding eberlein_embed(const Poset& p, const AntichainDecomposition& d,
                                 std::size_t cap = kDefaultFamilyCap);

/// Nonempty subsets of Q ordered by "is a proper initial segment of". Labels are
/// "{q1,q2,...}" in increasing order. ResourceError when 2^|Q| − 1 exceeds `cap`.
Poset sigma_q_truncation(std::vector<Rational> q, std::size_t cap = 4096);

}  // namespace renormlab
