#include "renormlab/generators.hpp"

#include <algorithm>

#include "renormlab/errors.hpp"

namespace renormlab {

Rational Rng::rational(long max_num, long max_den) {
  const long p = between(-max_num, max_num);
  const long q = between(1, max_den);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Poset random_tree(std::size_t nodes, Rng& rng, bool forest, const std::string& prefix) {
  auto set = IndexSet::make(labels(prefix, nodes));
  std::vector<Poset::Pair> rel;
  for (std::size_t i = 1; i < nodes; ++i) {
    const std::size_t choice = rng.below(forest ? i + 1 : i);
    if (choice < i) rel.emplace_back(set->index_of(prefix + std::to_string(choice)), set->index_of(prefix + std::to_string(i)));
  }
  return Poset(std::move(set), rel);
}

Poset random_poset(std::size_t nodes, Rng& rng, std::size_t num, std::size_t den) {
  auto set = IndexSet::make(labels("p", nodes));
  std::vector<Poset::Pair> rel;
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = i + 1; j < nodes; ++j) {
      if (rng.chance(num, den)) rel.emplace_back(set->index_of("p" + std::to_string(i)), set->index_of("p" + std::to_string(j)));
    }
  }
  return Poset(std::move(set), rel);
}

PhiInstance random_phi(std::size_t n, unsigned long max_phi, Rng& rng) {
  if (max_phi == 0) throw DomainError("random_phi: max_phi must be positive");
  std::map<std::pair<std::size_t, std::size_t>, unsigned long> phi;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) phi[{i, j}] = 1 + rng.below(max_phi);
  }
  return PhiInstance(n, std::move(phi));
}

IntervalSystem random_interval_system(std::size_t trees, std::size_t nodes_per_tree, Rng& rng,
                                      IntervalReading reading) {
  if (trees == 0 || nodes_per_tree == 0) throw DomainError("random_interval_system: empty system");
  // Node lists per tree as universe positions (labels n0, n1, ...).
  std::vector<std::vector<std::size_t>> members(trees);
  std::size_t next_label = 0;
  for (std::size_t a = 0; a < trees; ++a) {
    std::size_t fresh = nodes_per_tree;
    if (a > 0 && rng.chance(2, 3)) {
      const auto& prev = members[a - 1];
      members[a].push_back(prev[rng.below(prev.size())]);
      --fresh;
    }
    for (std::size_t i = 0; i < fresh; ++i) members[a].push_back(next_label++);
    // shuffle so a shared node is not always the root
    for (std::size_t i = members[a].size(); i > 1; --i) std::swap(members[a][i - 1], members[a][rng.below(i)]);
  }
  auto universe = IndexSet::make(labels("n", next_label));
  auto pos = [&](std::size_t label) { return universe->index_of("n" + std::to_string(label)); };
  std::vector<SystemTree> out;
  for (std::size_t a = 0; a < trees; ++a) {
    const auto& m = members[a];
    std::vector<Poset::Pair> rel;
    for (std::size_t i = 1; i < m.size(); ++i) rel.emplace_back(pos(m[rng.below(i)]), pos(m[i]));
    Poset order(universe, rel);
    Subset nodes(universe->size());
    for (std::size_t l : m) nodes.insert(pos(l));
    AntichainDecomposition levels = mirsky_decompose(order);
    AntichainDecomposition parts;
    for (const auto& level : levels.parts) {
      Subset part = level & nodes;
      if (part.empty()) continue;
      if (part.size() > 1 && rng.chance(1, 3)) {
        Subset split(universe->size());
        for (std::size_t v : part.elements()) {
          if (rng.chance(1, 2)) split.insert(v);
        }
        if (!split.empty() && !(split == part)) {
          parts.parts.push_back(split);
          part = part - split;
        }
      }
      parts.parts.push_back(part);
    }
    out.push_back(SystemTree{nodes, std::move(order), std::move(parts)});
  }
  return IntervalSystem(universe, std::move(out), reading);
}

SetFamily random_adequate_family(std::size_t n, std::size_t members, Rng& rng) {
  auto ground = IndexSet::make(labels("a", n));
  std::vector<Subset> seeds;
  for (std::size_t k = 0; k < members; ++k) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(1, 2)) s.insert(i);
    }
    seeds.push_back(std::move(s));
  }
  return downward_close(SetFamily(ground, std::move(seeds)));
}

LatticeVector random_vector(const IndexSetPtr& gamma, Rng& rng, std::size_t zero_num, std::size_t zero_den,
                            long max_num, long max_den) {
  std::vector<Rational> dense(gamma->size());
  for (auto& v : dense) {
    if (!rng.chance(zero_num, zero_den)) v = rng.rational(max_num, max_den);
  }
  return LatticeVector::from_dense(gamma, dense);
}

}  // namespace renormlab
