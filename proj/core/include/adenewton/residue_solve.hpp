#pragma once

// Zeros in the residue field of residue differential polynomials, within
// the fragment that can be decided exactly.

#include <optional>
#include <string>
#include <vector>

#include "adenewton/diffpoly.hpp"
#include "adenewton/field.hpp"

namespace adenewton {

using ResidueUPoly = UPoly<ResidueElem>;

struct ResidueSolveReport {
  /// Distinct roots, sorted by the residue order.
  std::vector<ResidueElem> roots;
  /// True when `roots` is every root in the residue field.
  bool complete = false;
  /// Every constant is a root because only derivative monomials survive.
  bool derivative_dominant = false;
  /// "algebraic-rational-roots", "linear", "algebraic-rational-function-roots",
  /// "first-order-linear-ansatz" or "constant-roots".
  std::string fragment;
  std::string reason;

  std::optional<ResidueElem> solved() const {
    if (roots.empty()) return std::nullopt;
    return roots.front();
  }
};

/// Roots of D in the residue field of `field`. With nonzero_only the root 0 is
/// dropped. Every returned root is checked by evaluation.
ResidueSolveReport residue_solve(const ResiduePoly& d, const Field& field, bool nonzero_only = true);

/// The part of D free of derivatives, as a polynomial in Y.
ResidueUPoly algebraic_part(const ResiduePoly& d);
bool has_derivatives(const ResiduePoly& d);

/// Rational c with p(c) = 0 for p over Q(z) (all z-coefficients vanish).
std::vector<Rational> rational_roots_over_qz(const std::vector<ResidueUPoly>& family);

/// Square root in Q(z), if the argument is a square.
std::optional<ResidueElem> sqrt_residue(const ResidueElem& x);

}  // namespace adenewton
