#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace renormlab {

/// Arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or an integer string. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

Rational abs(const Rational& q);

/// 2^{-n} (n >= 0).
Rational pow2_neg(unsigned n);

/// 4^{-n} (n >= 0).
Rational pow4_neg(unsigned n);

/// Exact square root when `q` is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

/// The rational with least denominator (then least absolute numerator)
/// strictly inside (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

double to_double(const Rational& q);

}  // namespace renormlab
