#pragma once

// The differential Newton diagram over the value group Q: exact valuation
// functions of multiplicative conjugates, equalizers, the diagram itself and
// the dominant degree along cut chains.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "adenewton/diffpoly.hpp"
#include "adenewton/dominant.hpp"

namespace adenewton {

/// γ ↦ v(P(t^γ Y)) for a homogeneous P over a one-dimensional value group.
///
/// P(t^γ Y) = t^(dγ) Σ_s Σ_i a_{i,s}(γ) t^s Y^i with a_{i,s} polynomial in γ,
/// so v_P(γ) = dγ + min{s : some a_{i,s}(γ) != 0}. Each shift s is an affine
/// piece of slope d; the exceptional points are the γ at which every
/// a_{i,s0} of the generic piece s0 vanishes.
class VPFunction {
 public:
  using GammaPoly = UPoly<ResidueElem>;

  explicit VPFunction(const DiffPoly& p);

  unsigned degree() const noexcept { return degree_; }
  /// Intercepts s of the affine pieces dγ + s, ascending.
  std::vector<Rational> intercepts() const;
  /// The generic piece: v_P(γ) = dγ + s0 off the exceptional set.
  const Rational& generic_intercept() const;
  /// Rational γ where v_P(γ) > dγ + s0, ascending.
  const std::vector<Rational>& exceptional() const noexcept { return exceptional_; }
  /// Shifts at or above this bound are unknown (coefficient truncation).
  const ExtGroupElement& hidden_from() const noexcept { return hidden_; }

  /// v(P(t^γ Y)). Throws BelowPrecision when truncation hides the value.
  Rational operator()(const Rational& gamma) const;

 private:
  unsigned degree_ = 0;
  std::map<Rational, std::vector<GammaPoly>> pieces_;
  std::vector<Rational> exceptional_;
  ExtGroupElement hidden_ = ExtGroupElement::infinity();
};

/// The unique α with v_P(α) = v_Q(α) for homogeneous P, Q of different
/// degrees; verified by direct conjugation. Throws DomainError for equal
/// degrees, DimensionMismatch for multi-dimensional groups.
GroupElement equalizer(const DiffPoly& p, const DiffPoly& q);
/// 𝔢(P, i, j) = equalizer(P_i, P_j).
GroupElement equalizer(const DiffPoly& p, unsigned i, unsigned j);

struct NewtonDiagram {
  /// i_0 < ... < i_n with i_0 = mul P and i_n = ddeg_E P.
  std::vector<unsigned> i_sequence;
  /// v(𝔢_1) > ... > v(𝔢_n), where 𝔢_m = 𝔢(P, i_{m-1}, i_m).
  std::vector<Rational> equalizers;
};

NewtonDiagram newton_diagram(const DiffPoly& p, const EConstraint& e);

struct DdegProfile {
  unsigned dmul = 0;
  unsigned ddeg = 0;
  friend bool operator==(const DdegProfile&, const DdegProfile&) = default;
};

/// (dmul, ddeg) of P(t^γ Y) read off the diagram of P on K^×.
DdegProfile ddeg_profile(const DiffPoly& p, const GroupElement& gamma);
DdegProfile ddeg_profile(const NewtonDiagram& diagram, const Rational& gamma);

/// Exponents of the algebraic starting monomials of P in E, i.e. the
/// equalizers of the diagram lying in E, in decreasing order.
std::vector<GroupElement> algebraic_starting_monomials(const DiffPoly& p, const EConstraint& e);

struct CutChain {
  std::vector<Series> points;
  /// Step used for the last point; defaults to the previous step.
  std::optional<GroupElement> tail_step;
};

struct ChainDdeg {
  std::vector<unsigned> sequence;
  bool stabilized = false;
  unsigned value = 0;
};

/// ddeg_{>=γ_ρ} P_{+a_ρ} with γ_ρ = v(a_{ρ+1} - a_ρ). Throws DomainError
/// when the steps are not strictly increasing.
ChainDdeg ddeg_along_chain(const DiffPoly& p, const CutChain& chain);

}  // namespace adenewton
