#include "renormlab/pseudotree.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "renormlab/errors.hpp"

namespace renormlab {

Poset::Poset(IndexSetPtr nodes, const std::vector<Pair>& less_than) : nodes_(std::move(nodes)) {
  if (!nodes_) throw DomainError("Poset: null node set");
  const std::size_t n = nodes_->size();
  below_.assign(n, Subset(n));
  above_.assign(n, Subset(n));
  for (const auto& [a, b] : less_than) {
    if (a >= n || b >= n) throw DomainError("Poset: relation mentions an unknown node");
    if (a == b) throw DomainError("Poset: cycle through " + nodes_->label(a));
    above_[a].insert(b);
  }
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (above_[i].contains(k)) above_[i] = above_[i] | above_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (above_[i].contains(i)) throw DomainError("Poset: cycle through " + nodes_->label(i));
    for (std::size_t j = above_[i].first(); j < n; j = above_[i].next(j)) below_[j].insert(i);
  }
}

Poset Poset::from_labels(std::vector<std::string> nodes,
                         const std::vector<std::pair<std::string, std::string>>& less_than) {
  auto set = IndexSet::make(std::move(nodes));
  std::vector<Pair> pairs;
  pairs.reserve(less_than.size());
  for (const auto& [a, b] : less_than) pairs.emplace_back(set->index_of(a), set->index_of(b));
  return Poset(std::move(set), pairs);
}

std::vector<Poset::Pair> Poset::relation() const {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = above_[a].first(); b < size(); b = above_[a].next(b)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Poset::Pair> Poset::covering_pairs() const {
  std::vector<Pair> out;
  for (const auto& [a, b] : relation()) {
    if ((above_[a] & below_[b]).empty()) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::size_t> Poset::topological_order() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below_[a].size() < below_[b].size(); });
  return order;
}

bool Poset::is_chain(const Subset& s) const {
  const auto e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!comparable(e[i], e[j])) return false;
    }
  }
  return true;
}

bool Poset::is_antichain(const Subset& s) const {
  const auto e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (comparable(e[i], e[j])) return false;
    }
  }
  return true;
}

PseudotreeCheck validate_pseudotree(const Poset& p) {
  PseudotreeCheck out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto e = p.below(x).elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (!p.comparable(e[i], e[j])) {
          out.pass = false;
          out.witness = x;
          out.incomparable = Poset::Pair{e[i], e[j]};
          return out;
        }
      }
    }
  }
  return out;
}

SetFamily chains_family(const Poset& p, std::size_t cap) {
  const std::size_t n = p.size();
  std::vector<Subset> chains{Subset(n)};
  Subset current(n);
  std::function<void(std::size_t)> extend = [&](std::size_t top) {
    const Subset& up = p.above(top);
    for (std::size_t v = up.first(); v < n; v = up.next(v)) {
      current.insert(v);
      if (chains.size() >= cap) throw ResourceError("chains_family: more than " + std::to_string(cap) + " chains");
      chains.push_back(current);
      extend(v);
      current.erase(v);
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    current.insert(v);
    if (chains.size() >= cap) throw ResourceError("chains_family: more than " + std::to_string(cap) + " chains");
    chains.push_back(current);
    extend(v);
    current.erase(v);
  }
  return SetFamily(p.nodes_ptr(), std::move(chains), Provenance::chains_of_pseudotree);
}

Rational max_weight_chain(const Poset& p, const std::vector<Rational>& weights) {
  if (weights.size() != p.size()) throw DomainError("max_weight_chain: one weight per node required");
  for (const auto& w : weights) {
    if (w < 0) throw DomainError("max_weight_chain: weights must be nonnegative");
  }
  std::vector<std::vector<std::size_t>> preds(p.size());
  for (const auto& [a, b] : p.covering_pairs()) preds[b].push_back(a);
  std::vector<Rational> best(p.size());
  Rational answer(0);
  for (std::size_t v : p.topological_order()) {
    Rational m(0);
    for (std::size_t u : preds[v]) {
      if (best[u] > m) m = best[u];
    }
    best[v] = m + weights[v];
    if (best[v] > answer) answer = best[v];
  }
  return answer;
}

namespace {

std::vector<std::size_t> heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  for (std::size_t v : p.topological_order()) {
    std::size_t m = 0;
    const Subset& down = p.below(v);
    for (std::size_t u = down.first(); u < p.size(); u = down.next(u)) m = std::max(m, h[u]);
    h[v] = m + 1;
  }
  return h;
}

}  // namespace

std::size_t longest_chain_length(const Poset& p) {
  const auto h = heights(p);
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

std::size_t AntichainDecomposition::part_of(std::size_t node) const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].contains(node)) return i + 1;
  }
  return 0;
}

std::string check_decomposition(const Poset& p, const AntichainDecomposition& d) {
  Subset seen(p.size());
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Subset& part = d.parts[i];
    if (part.universe() != p.size()) return "part " + std::to_string(i + 1) + " is over a different node set";
    if (seen.intersects(part)) return "part " + std::to_string(i + 1) + " overlaps an earlier part";
    if (!p.is_antichain(part)) return "part " + std::to_string(i + 1) + " is not an antichain";
    seen = seen | part;
  }
  if (seen.size() != p.size()) {
    const Subset missing = Subset::full(p.size()) - seen;
    return "node " + p.nodes().label(missing.first()) + " is not covered";
  }
  return {};
}

AntichainDecomposition mirsky_decompose(const Poset& p) {
  const auto h = heights(p);
  AntichainDecomposition d;
  const std::size_t levels = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  d.parts.assign(levels, Subset(p.size()));
  for (std::size_t v = 0; v < p.size(); ++v) d.parts[h[v] - 1].insert(v);
  return d;
}

SigmaFromRho sigma_from_rho(const Poset& p, const RhoFunction& rho) {
  require_same_ground(p.nodes_ptr(), rho.gamma(), "sigma_from_rho");
  if (!check_strictly_increasing(rho).pass) throw DomainError("sigma_from_rho: rho is not strictly increasing");
  SigmaFromRho out;
  out.sigma.resize(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    Subset down = p.below(x);
    const auto lo = rho.find(indicator_point(down));
    down.insert(x);
    const auto hi = rho.find(indicator_point(down));
    if (!lo || !hi) throw DomainError("sigma_from_rho: rho is not defined on the chains at " + p.nodes().label(x));
    if (!(rho.value(*lo) < rho.value(*hi))) {
      throw DomainError("sigma_from_rho: empty interval at " + p.nodes().label(x));
    }
    out.sigma[x] = simplest_between(rho.value(*lo), rho.value(*hi));
  }
  for (const auto& [a, b] : p.relation()) {
    if (!(out.sigma[a] < out.sigma[b])) out.strictly_increasing = false;
  }
  std::map<Rational, Subset> fibers;
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto it = fibers.try_emplace(out.sigma[x], Subset(p.size())).first;
    it->second.insert(x);
  }
  for (const auto& [q, fib] : fibers) {
    if (!p.is_antichain(fib)) out.fibers_antichain = false;
  }
  return out;
}

LatticeVector eberlein_image(const AntichainDecomposition& d, const IndexSetPtr& nodes, const Subset& a) {
  std::vector<LatticeVector::Entry> entries;
  for (std::size_t n = 1; n <= d.parts.size(); ++n) {
    const Subset hit = a & d.parts[n - 1];
    if (hit.size() > 1) throw DomainError("eberlein_image: A meets part " + std::to_string(n) + " twice");
    if (hit.size() == 1) entries.push_back({hit.first(), pow2_neg(static_cast<unsigned>(n))});
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
  return LatticeVector(nodes, std::move(entries));
}

EberleinEmbedding eberlein_embed(const Poset& p, const AntichainDecomposition& d, std::size_t cap) {
  const std::string bad = check_decomposition(p, d);
  if (!bad.empty()) throw DomainError("eberlein_embed: " + bad);
  EberleinEmbedding out{chains_family(p, cap), {}, true, true};
  const auto& members = out.chains.members();
  out.images.reserve(members.size());
  for (const auto& a : members) out.images.push_back(eberlein_image(d, p.nodes_ptr(), a));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (j > i && out.images[i] == out.images[j]) out.injective = false;
      if (members[i].is_subset_of(members[j])) {
        const Order o = pointwise_compare(out.images[i], out.images[j]);
        if (o != Order::less && o != Order::equal) out.order_compatible = false;
      }
    }
  }
  return out;
}

Poset sigma_q_truncation(std::vector<Rational> q, std::size_t cap) {
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  if (q.size() >= 63 || ((std::uint64_t{1} << q.size()) - 1) > cap) {
    throw ResourceError("sigma_q_truncation: 2^" + std::to_string(q.size()) + " - 1 nodes exceed the cap " +
                        std::to_string(cap));
  }
  const std::uint64_t total = std::uint64_t{1} << q.size();
  std::vector<std::string> labels;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < total; ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (m >> i & 1U) {
        if (s.size() > 1) s += ",";
        s += to_string(q[i]);
      }
    }
    labels.push_back(s + "}");
    masks.push_back(m);
  }
  auto nodes = IndexSet::make(labels);
  // S is a proper initial segment of T iff S ⊊ T and every element of T below max S lies in S.
  auto initial_segment = [](std::uint64_t s, std::uint64_t t) {
    if ((s & t) != s || s == t) return false;
    const int top = 63 - __builtin_clzll(s);
    const std::uint64_t low = (top == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (top + 1)) - 1);
    return (t & low) == s;
  };
  std::vector<std::size_t> idx(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) idx[i] = nodes->index_of(labels[i]);
  std::vector<Poset::Pair> rel;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (initial_segment(masks[i], masks[j])) rel.emplace_back(idx[i], idx[j]);
    }
  }
  return Poset(std::move(nodes), rel);
}

}  // namespace renormlab
