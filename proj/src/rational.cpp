#include "renormlab/rational.hpp"

#include <cctype>

#include "renormlab/errors.hpp"

namespace renormlab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class floor_of(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi_infinite means hi = +inf.
Rational simplest_nonneg(const Rational& lo, const Rational& hi, bool hi_infinite) {
  const mpz_class fl = floor_of(lo);
  const Rational next(fl + 1);
  if (hi_infinite || next < hi) {
    return next;
  }
  // (lo, hi) lies inside [fl, fl + 1]; recurse on the reciprocal of the
  // fractional parts, which swaps the roles of the endpoints.
  const Rational lo_frac = lo - Rational(fl);
  const Rational hi_frac = hi - Rational(fl);
  const Rational inv_lo = 1 / hi_frac;
  Rational inner;
  if (lo_frac == 0) {
    inner = simplest_nonneg(inv_lo, Rational(0), true);
  } else {
    inner = simplest_nonneg(inv_lo, 1 / lo_frac, false);
  }
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_text(num) || (slash != std::string_view::npos && (!is_integer_text(den) || den[0] == '-' || den[0] == '+'))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow2_neg(unsigned n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  return Rational(mpz_class(1), den);
}

Rational pow4_neg(unsigned n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, n);
  return Rational(mpz_class(1), den);
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) {
    Rational neg = simplest_between(Rational(-hi), Rational(-lo));
    return Rational(-neg);
  }
  return simplest_nonneg(lo, hi, false);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace renormlab
