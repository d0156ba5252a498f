#pragma once

// Truncated Hahn series with finite support over the residue field of a
// preset. Every series carries a precision certificate: all stored exponents
// lie strictly below it, and nothing is known about the tail at or above it.
// Exact series have infinite precision.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adenewton/field.hpp"
#include "adenewton/residue.hpp"
#include "adenewton/valgroup.hpp"

namespace adenewton {

class Series {
 public:
  using TermMap = std::map<GroupElement, ResidueElem>;

  /// Exact zero of the given field.
  explicit Series(Field field = Field());

  static Series zero(const Field& field) { return Series(field); }
  static Series constant(const Field& field, const ResidueElem& c);
  /// c * t^exponent (exact).
  static Series monomial(const Field& field, const GroupElement& exponent, const ResidueElem& c = ResidueElem(1));
  /// c * t^q for the one-dimensional group.
  static Series monomial(const Field& field, const Rational& q, const ResidueElem& c = ResidueElem(1));
  /// O(t^bound): no known terms.
  static Series big_o(const Field& field, const GroupElement& bound);
  /// Builds from terms, dropping zero coefficients and terms at or above precision.
  static Series from_terms(const Field& field, TermMap terms, ExtGroupElement precision = ExtGroupElement::infinity());

  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  const ExtGroupElement& precision() const noexcept { return precision_; }

  bool is_exact() const noexcept { return precision_.is_infinite(); }
  bool has_terms() const noexcept { return !terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && is_exact(); }
  /// Single exact term with coefficient 1.
  bool is_monomial() const;

  /// Minimum stored exponent; infinity for exact zero. Throws BelowPrecision
  /// when there are no terms below a finite precision.
  ExtGroupElement valuation() const;
  std::optional<ExtGroupElement> known_valuation() const;
  /// valuation() when known, the precision bound otherwise.
  ExtGroupElement valuation_lower_bound() const;

  ResidueElem coefficient(const GroupElement& exponent) const;
  /// Coefficient of t^0. Throws DomainError if v(a) < 0.
  ResidueElem residue() const;
  /// (v(f), f / t^v(f)). Throws DomainError / BelowPrecision for zero input.
  std::pair<GroupElement, Series> dominant_split() const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series scaled(const ResidueElem& c) const;
  /// Multiplication by t^g.
  Series shifted(const GroupElement& g) const;
  /// Adds O(t^bound) (no-op when bound is not below the current precision).
  Series truncated(const GroupElement& bound) const;

  /// The derivation of the preset.
  Series derive() const;
  Series derive(unsigned times) const;

  /// a^-1 up to terms of exponent < out_precision. A single exact term
  /// inverts exactly. Throws BelowPrecision when no term is known.
  Series invert(const GroupElement& out_precision) const;

  /// Structural equality: same field, same terms, same precision.
  friend bool operator==(const Series& a, const Series& b);

  /// "c*t^(p/q) + ... + O(t^(p/q))"; increasing exponent order.
  std::string to_string() const;

 private:
  Field field_;
  TermMap terms_;
  ExtGroupElement precision_ = ExtGroupElement::infinity();

  void normalize();
};

/// "" for t^0, "t", "t^2", "t^(1/2)", "t^(-1)", "t^(1,2)".
std::string render_power(const GroupElement& exponent);
/// "c*t^q" with the unit coefficient omitted and compound coefficients
/// parenthesized. `body` replaces the power when non-empty.
std::string render_term(const ResidueElem& c, const std::string& body);

/// Joins rendered terms with " + ", turning a leading '-' into " - ".
std::string join_signed_terms(const std::vector<std::string>& parts);

/// Dominance of a relative to b.
enum class Dominance {
  Less,          ///< a ≺ b
  Greater,       ///< a ≻ b
  Asymptotic,    ///< a ≍ b but not a ∼ b
  Equivalent,    ///< a ∼ b
  Incomparable,  ///< truncation hides a valuation
};

Dominance dominance(const Series& a, const Series& b);
std::string to_string(Dominance d);

/// Coarsened dominance of a relative to b by the convex subgroup of elements
/// archimedean-smaller than v_phi.
enum class CoarseDominance {
  Less,        ///< a ≺_φ b
  Asymptotic,  ///< a ≍_φ b
  Greater,     ///< a ≻_φ b
};

/// Throws DomainError when v_phi = 0, BelowPrecision when a valuation is
/// unknown, and DomainError when either side is zero.
CoarseDominance coarse_dominance(const GroupElement& va, const GroupElement& vb, const GroupElement& v_phi);
CoarseDominance coarse_dominance(const Series& a, const Series& b, const GroupElement& v_phi);

struct FieldCheckReport {
  bool passed = true;
  std::size_t samples = 0;
  std::string property;
  std::optional<std::string> counterexample;
};

/// Samples f in the maximal ideal and checks v(f') > 0.
FieldCheckReport check_small_derivation(const Field& field, std::size_t samples, std::uint64_t seed = 1);
/// Samples f, g in the maximal ideal and checks f ≺ g <=> f' ≺ g'. Only the
/// h-type preset is asymptotic; for monotone the report documents the failure.
FieldCheckReport check_asymptotic(const Field& field, std::size_t samples, std::uint64_t seed = 1);

}  // namespace adenewton
