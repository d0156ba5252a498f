#pragma once

// Dominant parts, dominant degree and multiplicity, and the dominant degree
// on the three kinds of ≼-closed sets used by the solver.

#include <string>

#include "adenewton/diffpoly.hpp"

namespace adenewton {

/// A ≼-closed set of nonzero elements: all of K^×, {f : v(f) >= γ} or {f : v(f) > γ}.
class EConstraint {
 public:
  enum class Kind { All, ValGE, ValGT };

  static EConstraint all() { return EConstraint(Kind::All, GroupElement()); }
  static EConstraint val_ge(const GroupElement& g) { return EConstraint(Kind::ValGE, g); }
  static EConstraint val_gt(const GroupElement& g) { return EConstraint(Kind::ValGT, g); }

  Kind kind() const noexcept { return kind_; }
  bool is_all() const noexcept { return kind_ == Kind::All; }
  /// Throws DomainError for All.
  const GroupElement& bound() const;

  /// Whether a nonzero element of valuation v lies in the set.
  bool contains(const GroupElement& v) const;
  /// Whether this set is contained in o.
  bool subset_of(const EConstraint& o) const;

  friend bool operator==(const EConstraint& a, const EConstraint& b);

  /// "Y in K*", "Y ≼ t^2", "Y ≺ t".
  std::string to_string() const;

 private:
  EConstraint(Kind kind, GroupElement g) : kind_(kind), bound_(std::move(g)) {}
  Kind kind_;
  GroupElement bound_;
};

struct DominantPart {
  GroupElement exponent;  ///< v(P), the exponent of the dominant monomial
  ResiduePoly poly;       ///< D_P
  /// Some coefficient is only known up to a precision bound above v(P).
  bool relied_on_precision = false;
};

/// v(P). Throws DomainError for P = 0, BelowPrecision when hidden.
GroupElement dominant_monomial(const DiffPoly& p);
DominantPart dominant_part_with_provenance(const DiffPoly& p);
ResiduePoly dominant_part(const DiffPoly& p);
unsigned ddeg(const DiffPoly& p);
unsigned dmul(const DiffPoly& p);
/// ddeg and dmul of P(t^g Y).
unsigned ddeg_at(const DiffPoly& p, const GroupElement& g);
unsigned dmul_at(const DiffPoly& p, const GroupElement& g);
/// max{ddeg P_{×f} : f ∈ E}.
unsigned ddeg_on(const DiffPoly& p, const EConstraint& e);
/// mul (D_P)_{+ū} for u ≍ 1.
unsigned residue_multiplicity_at(const DiffPoly& p, const Series& u);

}  // namespace adenewton
