#include "atlas/rational.hpp"

#include <cctype>

#include "atlas/error.hpp"

namespace atlas {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

[[noreturn]] void bad(std::string_view text) {
  throw InvalidInput("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!signed_digits(num) || !all_digits(den)) bad(text);
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class p(n, 10), q(std::string(den), 10);
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) bad(text);
  if (!int_part.empty() && !all_digits(int_part)) bad(text);
  if (dot != std::string_view::npos && !frac_part.empty() && !all_digits(frac_part)) bad(text);
  if (dot != std::string_view::npos && frac_part.empty() && int_part.empty()) bad(text);
  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty()) bad(text);
  mpz_class num(digits, 10);
  mpz_class den = 1;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  Rational r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

Rational power(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  result.canonicalize();
  return result;
}

}  // namespace atlas
