#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace atlas {

// Exact rational scalar used for every weight, distance and radius.
using Rational = mpq_class;

// Accepts integers ("3"), fractions ("-2/5") and decimals ("0.125", "1e-3" is
// not accepted). Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational midpoint(const Rational& a, const Rational& b);

// base^exponent for a possibly negative integer exponent.
Rational power(const Rational& base, long exponent);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace atlas
