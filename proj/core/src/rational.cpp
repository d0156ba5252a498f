#include "adenewton/rational.hpp"

#include <cctype>

#include "adenewton/errors.hpp"

namespace adenewton {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&](std::size_t col) -> Rational {
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, col + 1);
  };
  if (text.empty()) return fail(0);
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return fail(pos);
  Integer num(std::string(text.substr(num_begin, pos - num_begin)));
  if (text[0] == '-') num = -num;
  Integer den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') return fail(pos);
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) return fail(pos);
    den = Integer(std::string(text.substr(den_begin)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, den_begin + 1);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace adenewton
