#include "combinatorics.hpp"

#include <utility>

namespace renormlab::detail {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t limit) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (r > mpz_class(static_cast<unsigned long>(limit))) return limit;
  return static_cast<std::size_t>(r.get_ui());
}

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[row][c] -= factor * a[col][c];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace renormlab::detail
