#include "adenewton/dominant.hpp"

#include "adenewton/errors.hpp"

namespace adenewton {

const GroupElement& EConstraint::bound() const {
  if (kind_ == Kind::All) throw DomainError("the constraint Y in K* has no bound");
  return bound_;
}

bool EConstraint::contains(const GroupElement& v) const {
  switch (kind_) {
    case Kind::All: return true;
    case Kind::ValGE: return v >= bound_;
    case Kind::ValGT: return v > bound_;
  }
  return false;
}

bool EConstraint::subset_of(const EConstraint& o) const {
  if (o.kind_ == Kind::All) return true;
  if (kind_ == Kind::All) return false;
  if (kind_ == Kind::ValGT && o.kind_ == Kind::ValGE) return bound_ >= o.bound_;
  if (kind_ == Kind::ValGE && o.kind_ == Kind::ValGT) return bound_ > o.bound_;
  return bound_ >= o.bound_;
}

bool operator==(const EConstraint& a, const EConstraint& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ == EConstraint::Kind::All || a.bound_ == b.bound_;
}

std::string EConstraint::to_string() const {
  if (kind_ == Kind::All) return "Y in K*";
  std::string power = render_power(bound_);
  if (power.empty()) power = "1";
  return std::string(kind_ == Kind::ValGE ? "Y ≼ " : "Y ≺ ") + power;
}

GroupElement dominant_monomial(const DiffPoly& p) {
  if (p.is_zero() && p.floor().is_infinite()) throw DomainError("dominant monomial of the zero differential polynomial");
  return v_of(p).finite();
}

DominantPart dominant_part_with_provenance(const DiffPoly& p) {
  DominantPart out{dominant_monomial(p), ResiduePoly(ResidueContext{}, p.order_bound()), p.floor().is_finite()};
  for (const auto& [i, c] : p.terms()) {
    if (!c.is_exact()) out.relied_on_precision = true;
    out.poly.add_term(i, c.coefficient(out.exponent));
  }
  return out;
}

ResiduePoly dominant_part(const DiffPoly& p) { return dominant_part_with_provenance(p).poly; }

unsigned ddeg(const DiffPoly& p) { return dominant_part(p).degree(); }

unsigned dmul(const DiffPoly& p) { return dominant_part(p).mul_at_zero(); }

unsigned ddeg_at(const DiffPoly& p, const GroupElement& g) { return ddeg(mul_conjugate_power(p, g)); }

unsigned dmul_at(const DiffPoly& p, const GroupElement& g) { return dmul(mul_conjugate_power(p, g)); }

unsigned ddeg_on(const DiffPoly& p, const EConstraint& e) {
  if (p.is_zero()) throw DomainError("dominant degree of the zero differential polynomial");
  switch (e.kind()) {
    case EConstraint::Kind::All: return p.degree();
    case EConstraint::Kind::ValGE: return ddeg_at(p, e.bound());
    case EConstraint::Kind::ValGT: return dmul_at(p, e.bound());
  }
  return 0;
}

unsigned residue_multiplicity_at(const DiffPoly& p, const Series& u) {
  if (u.valuation() != ExtGroupElement(GroupElement(p.context().dim()))) {
    throw DomainError("residue multiplicity needs an element of valuation 0, got " + u.to_string());
  }
  return dominant_part(p).add_conjugate(u.residue()).mul_at_zero();
}

}  // namespace adenewton
