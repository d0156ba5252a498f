#pragma once

// Dense univariate polynomials over an exact field. Used for the numerator
// and denominator of rational functions in Q(z) and for algebraic residue
// equations in one variable over the residue field.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adenewton/errors.hpp"
#include "adenewton/rational.hpp"

namespace adenewton {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

namespace detail {
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(F c) { return UPoly(std::vector<F>{std::move(c)}); }
  static UPoly monomial(F c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly variable() { return monomial(F(1), 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const noexcept { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  UPoly operator-() const {
    UPoly out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly scaled(const F& s) const {
    std::vector<F> v(c_);
    for (auto& x : v) x = x * s;
    return UPoly(std::move(v));
  }

  /// Formal derivative with respect to the polynomial variable.
  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<F> v(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<long>(i));
    return UPoly(std::move(v));
  }

  F evaluate(const F& x) const {
    F acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Euclidean division; throws DomainError on division by zero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> rem(a.c_);
    std::vector<F> quo(a.c_.size() - b.c_.size() + 1, F(0));
    const F inv_lc = F(1) / b.lc();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const F q = rem[k + b.c_.size() - 1] * inv_lc;
      quo[k] = q;
      if (detail::coeff_is_zero(q)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / lc());
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = UPoly<F>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Exact quotient a / b; throws DomainError if the division leaves a remainder.
template <class F>
UPoly<F> exact_quotient(const UPoly<F>& a, const UPoly<F>& b) {
  auto [q, r] = UPoly<F>::divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

/// Yun's squarefree decomposition in characteristic zero: monic factors
/// paired with their multiplicity, so that a = lc(a) * prod f_i^{m_i}.
template <class F>
std::vector<std::pair<UPoly<F>, unsigned>> squarefree_decomposition(const UPoly<F>& a) {
  std::vector<std::pair<UPoly<F>, unsigned>> out;
  if (a.degree() <= 0) return out;
  const UPoly<F> f = a.monic();
  const UPoly<F> df = f.derivative();
  UPoly<F> g = gcd(f, df);
  UPoly<F> b = exact_quotient(f, g);
  UPoly<F> c = exact_quotient(df, g);
  UPoly<F> d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UPoly<F> h = gcd(b, d);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = exact_quotient(b, h);
    c = exact_quotient(d, h);
    d = c - b.derivative();
  }
  return out;
}

using QPoly = UPoly<Rational>;

/// Distinct rational roots with multiplicities, sorted increasingly.
/// Throws DomainError("rational root search limit") when the rational root
/// theorem would need to factor integers beyond the trial-division bound.
std::vector<std::pair<Rational, unsigned>> rational_roots(const QPoly& p);

/// Common rational roots of a family of polynomials (all of which must vanish).
std::vector<Rational> common_rational_roots(const std::vector<QPoly>& family);

/// Renders with the given variable name, highest degree first, e.g. "z^2 - 1/2*z + 3".
std::string to_string(const QPoly& p, const std::string& var);

}  // namespace adenewton
