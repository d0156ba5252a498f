#include "adenewton/upoly.hpp"

#include <algorithm>
#include <map>

namespace adenewton {

namespace {

constexpr unsigned long kTrialDivisionBound = 1'000'000;

// Prime factorisation of n > 0 by trial division; a large leftover cofactor
// is accepted only when it is (probably) prime.
std::map<Integer, unsigned> factor_integer(Integer n) {
  std::map<Integer, unsigned> out;
  for (unsigned long p = 2; p <= kTrialDivisionBound && Integer(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) {
    if (Integer(kTrialDivisionBound) * kTrialDivisionBound < n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw DomainError("rational root search limit: cannot factor " + n.get_str());
    }
    ++out[n];
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factor_integer(abs(n))) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Primitive integer coefficient vector of a nonzero rational polynomial.
std::vector<Integer> primitive_integer_coeffs(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  for (auto& v : out) v /= g;
  return out;
}

std::vector<Rational> roots_of_squarefree(const QPoly& f) {
  std::vector<Rational> out;
  std::vector<Integer> a = primitive_integer_coeffs(f);
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) out.emplace_back(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  if (a.size() <= 1) return out;
  const QPoly reduced([&] {
    std::vector<Rational> v;
    for (const auto& x : a) v.emplace_back(x);
    return v;
  }());
  const auto nums = divisors(a.front());
  const auto dens = divisors(a.back());
  for (const auto& q : dens) {
    for (const auto& p : nums) {
      for (int s : {1, -1}) {
        Rational cand(Integer(p * s), q);
        cand.canonicalize();
        if (cand.get_den() != q) continue;  // reached via a smaller denominator already
        if (is_zero(reduced.evaluate(cand))) out.push_back(cand);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw DomainError("every rational is a root of the zero polynomial");
  std::vector<std::pair<Rational, unsigned>> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (auto& r : roots_of_squarefree(factor)) out.emplace_back(std::move(r), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<Rational> common_rational_roots(const std::vector<QPoly>& family) {
  QPoly g;
  for (const auto& p : family) g = gcd(g, p);
  if (g.is_zero()) throw DomainError("every rational is a common root of an all-zero family");
  std::vector<Rational> out;
  for (auto& [r, m] : rational_roots(g)) out.push_back(r);
  return out;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) c = -c;
    std::string mono;
    if (k >= 1) mono = var;
    if (k >= 2) mono += "^" + std::to_string(k);
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace adenewton
