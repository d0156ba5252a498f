#pragma once

// The value group Q^n with the lexicographic order, its extension by
// infinity, and archimedean classes.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adenewton/rational.hpp"

namespace adenewton {

class GroupElement {
 public:
  /// The zero element of Q^dim.
  explicit GroupElement(std::size_t dim = 1);
  explicit GroupElement(std::vector<Rational> coords);
  /// Element of Q^1.
  static GroupElement scalar(const Rational& q);
  /// The unit vector e_index of Q^dim.
  static GroupElement unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  /// Only meaningful for dim() == 1.
  const Rational& value() const;

  bool is_zero() const;
  int sign() const;

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  GroupElement& operator*=(const Rational& q);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(GroupElement a, const Rational& q) { return a *= q; }
  friend GroupElement operator*(const Rational& q, GroupElement a) { return a *= q; }
  /// Exact division by a positive integer (the group is divisible).
  GroupElement divided_by(unsigned long m) const;
  GroupElement abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

  /// "p/q" for dim 1, "(p/q,r/s,...)" otherwise.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Lexicographic comparison; throws DimensionMismatch.
std::strong_ordering lex_compare(const GroupElement& a, const GroupElement& b);

class ExtGroupElement {
 public:
  ExtGroupElement(GroupElement g) : value_(std::move(g)) {}  // NOLINT(google-explicit-constructor)
  static ExtGroupElement infinity() { return ExtGroupElement(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws DomainError for infinity.
  const GroupElement& finite() const;

  friend ExtGroupElement operator+(const ExtGroupElement& a, const ExtGroupElement& b);
  friend bool operator==(const ExtGroupElement& a, const ExtGroupElement& b);
  friend std::strong_ordering operator<=>(const ExtGroupElement& a, const ExtGroupElement& b);

  std::string to_string() const;

 private:
  ExtGroupElement() = default;
  std::optional<GroupElement> value_;
};

inline ExtGroupElement min(const ExtGroupElement& a, const ExtGroupElement& b) { return b < a ? b : a; }

/// Archimedean class of a nonzero element of Q^n (lex): determined by the
/// index of the first nonzero coordinate. A larger index is a smaller class.
struct ArchClass {
  std::size_t leading_index;

  friend bool operator==(const ArchClass&, const ArchClass&) = default;
  friend std::strong_ordering operator<=>(const ArchClass& a, const ArchClass& b) {
    return b.leading_index <=> a.leading_index;
  }
};

/// Throws DomainError for the zero element.
ArchClass arch_class(const GroupElement& g);

/// [alpha] < [beta]; alpha = 0 counts as o(beta). Throws DomainError if beta = 0.
bool is_little_o(const GroupElement& alpha, const GroupElement& beta);

/// Membership in the convex subgroup {g : [g] < [v_phi]}. Throws DomainError
/// if v_phi = 0 (phi ≍ 1 gives no coarsening).
bool in_gamma_phi(const GroupElement& g, const GroupElement& v_phi);

}  // namespace adenewton
