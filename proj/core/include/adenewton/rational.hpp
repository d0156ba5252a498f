#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adenewton {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (q > 0). Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// num/den in canonical form; throws DomainError when den = 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace adenewton
