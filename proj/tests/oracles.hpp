// Brute-force reference implementations for the tests. Deliberately naive and
// independent of the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "renormlab/families.hpp"
#include "renormlab/lattice.hpp"
#include "renormlab/pseudotree.hpp"
#include "renormlab/rational.hpp"

namespace oracle {

using renormlab::LatticeVector;
using renormlab::Rational;
using renormlab::SetFamily;
using renormlab::Subset;

inline std::vector<Rational> dense(const LatticeVector& x) { return x.dense(); }

inline Rational qabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// sup over every member of Σ_{γ∈A}|x_γ|.
inline Rational adequate_norm(const SetFamily& f, const LatticeVector& x) {
  const auto d = dense(x);
  Rational best(0);
  for (const auto& m : f.members()) {
    Rational s(0);
    for (std::size_t g : m.elements()) s += qabs(d[g]);
    if (s > best) best = s;
  }
  return best;
}

/// max over all orderings π of the support of Σ 4^{-k} x_{π(k)}².
inline Rational day_sq_permutations(const LatticeVector& x) {
  std::vector<Rational> v;
  for (const auto& e : x.entries()) v.push_back(e.value * e.value);
  std::vector<std::size_t> perm(v.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational best(0);
  do {
    Rational s(0);
    Rational w(1, 4);
    for (std::size_t k = 0; k < perm.size(); ++k, w /= 4) s += w * v[perm[k]];
    if (s > best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Gaussian elimination, nullopt when singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// max ⟨f, x⟩ over the λ_F unit ball, by enumerating its vertices in full dimension.
/// Facets are σ⊙1_A · x <= 1 over maximal A and sign patterns σ on A.
inline Rational dual_norm_vertices(const SetFamily& family, const std::vector<Rational>& f) {
  const std::size_t dim = family.ground().size();
  std::vector<std::vector<Rational>> facets;
  for (const auto& a : renormlab::maximal_members(family)) {
    const auto e = a.elements();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
      std::vector<Rational> row(dim);
      for (std::size_t i = 0; i < e.size(); ++i) row[e[i]] = (s >> i & 1U) ? -1 : 1;
      facets.push_back(row);
    }
  }
  Rational best(0);
  std::vector<std::size_t> pick(dim);
  // all dim-subsets of facets
  std::vector<bool> sel(facets.size(), false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(std::min(dim, facets.size())), true);
  if (facets.size() < dim) return best;
  do {
    std::vector<std::vector<Rational>> a;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (sel[i]) a.push_back(facets[i]);
    }
    auto x = solve(a, std::vector<Rational>(dim, Rational(1)));
    if (!x) continue;
    bool feasible = true;
    for (const auto& row : facets) {
      Rational s(0);
      for (std::size_t g = 0; g < dim; ++g) s += row[g] * (*x)[g];
      if (s > 1) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Rational v(0);
    for (std::size_t g = 0; g < dim; ++g) v += f[g] * (*x)[g];
    if (v > best) best = v;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return best;
}

/// Chains by testing every subset.
inline std::vector<Subset> chains_by_subsets(const renormlab::Poset& p) {
  std::vector<Subset> out;
  const std::size_t n = p.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Subset s = Subset::from_mask(n, m);
    if (p.is_chain(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Fewest antichains partitioning the poset, by trying every colouring with k colours.
inline std::size_t min_antichain_partition(const renormlab::Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> colour(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = i + 1; j < n && ok; ++j) {
          if (colour[i] == colour[j] && p.comparable(i, j)) ok = false;
        }
      }
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace oracle
