#pragma once

// Residue field elements: exact rationals (trivial derivation) or rational
// functions in z over Q with derivation d/dz.

#include <compare>
#include <string>
#include <variant>

#include "adenewton/rational.hpp"
#include "adenewton/upoly.hpp"

namespace adenewton {

/// Reduced quotient num/den in Q(z): gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(QPoly::constant(Rational(1))) {}
  explicit RatFunc(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}
  explicit RatFunc(QPoly num, QPoly den = QPoly::constant(Rational(1)));

  static RatFunc z() { return RatFunc(QPoly::variable()); }

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const { return num_.coeff(0); }

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc derivative() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

class ResidueElem {
 public:
  ResidueElem() : v_(Rational(0)) {}
  ResidueElem(long v) : v_(Rational(v)) {}               // NOLINT(google-explicit-constructor)
  ResidueElem(const Rational& q) : v_(q) {}              // NOLINT(google-explicit-constructor)
  explicit ResidueElem(RatFunc f);

  static ResidueElem z() { return ResidueElem(RatFunc::z()); }

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  /// Throws DomainError when the element is not a constant.
  const Rational& rational() const;
  RatFunc as_ratfunc() const;

  bool is_zero() const;
  bool is_one() const;

  ResidueElem operator-() const;
  friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b);
  /// Throws DomainError on division by zero.
  friend ResidueElem operator/(const ResidueElem& a, const ResidueElem& b);
  ResidueElem& operator+=(const ResidueElem& o) { return *this = *this + o; }
  ResidueElem& operator*=(const ResidueElem& o) { return *this = *this * o; }

  /// The residue derivation: zero on Q, d/dz on Q(z).
  ResidueElem derive() const;

  friend bool operator==(const ResidueElem& a, const ResidueElem& b) { return a.v_ == b.v_; }
  /// A fixed total order used for deterministic tie-breaking: constants first
  /// (by value), then rational functions (by degree, then coefficients).
  friend std::strong_ordering operator<=>(const ResidueElem& a, const ResidueElem& b);

  std::string to_string() const;
  /// True when rendering as a factor needs surrounding parentheses.
  bool is_compound() const;
  /// True for a negative rational constant (rendered with a leading '-').
  bool is_negative_constant() const { return is_rational() && sgn(std::get<Rational>(v_)) < 0; }

 private:
  std::variant<Rational, RatFunc> v_;
};

inline bool is_zero(const ResidueElem& e) { return e.is_zero(); }

}  // namespace adenewton
