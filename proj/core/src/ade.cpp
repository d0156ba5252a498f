#include "adenewton/ade.hpp"

#include <algorithm>

#include "adenewton/errors.hpp"

namespace adenewton {

ADE::ADE(DiffPoly p, EConstraint e) : p_(std::move(p)), e_(std::move(e)) {
  if (p_.is_zero()) throw DomainError("asymptotic differential equation with P = 0");
  if (!e_.is_all() && e_.bound().dim() != p_.context().dim()) {
    throw DimensionMismatch("constraint bound does not match the value group");
  }
}

std::string ADE::to_string() const { return p_.to_string() + " = 0 where " + e_.to_string(); }

unsigned ddeg_of(const ADE& eq) { return ddeg_on(eq.poly(), eq.constraint()); }

namespace {

bool in_constraint(const EConstraint& e, const Series& f) {
  if (f.is_exact_zero()) return false;
  return e.contains(f.valuation().finite());
}

EConstraint shift_constraint(const EConstraint& e, const GroupElement& g) {
  switch (e.kind()) {
    case EConstraint::Kind::All: return e;
    case EConstraint::Kind::ValGE: return EConstraint::val_ge(e.bound() + g);
    case EConstraint::Kind::ValGT: return EConstraint::val_gt(e.bound() + g);
  }
  return e;
}

// A point of the open interval (lo, hi) ∩ E; either end may be absent.
std::optional<Rational> sample_in(std::optional<Rational> lo, std::optional<Rational> hi, const EConstraint& e) {
  if (!e.is_all()) {
    const Rational b = e.bound().value();
    if (!lo || *lo < b) lo = b;
  }
  if (lo && hi && !(*lo < *hi)) return std::nullopt;
  if (lo && hi) return (*lo + *hi) / 2;
  if (lo) return *lo + 1;
  if (hi) return *hi - 1;
  return Rational(0);
}

}  // namespace

ADE refine(const ADE& eq, const Series& f, const EConstraint& e2) {
  if (!e2.subset_of(eq.constraint())) {
    throw DomainError("refinement constraint " + e2.to_string() + " is not contained in " + eq.constraint().to_string());
  }
  if (!f.is_exact_zero() && !in_constraint(eq.constraint(), f)) {
    throw DomainError("refinement shift " + f.to_string() + " does not lie in " + eq.constraint().to_string());
  }
  return ADE(eq.poly().add_conjugate(f), e2);
}

ApproxCheck is_approx_solution(const ADE& eq, const Series& y) {
  if (y.is_exact_zero()) throw DomainError("approximate solutions are nonzero");
  if (!in_constraint(eq.constraint(), y)) throw DomainError(y.to_string() + " does not lie in " + eq.constraint().to_string());
  const unsigned m = dmul_at(eq.poly().add_conjugate(y), y.valuation().finite());
  return ApproxCheck{m >= 1, m};
}

ApproxEnumeration enumerate_approx_solutions(const ADE& eq, unsigned min_multiplicity) {
  ApproxEnumeration out;
  std::vector<GroupElement> monomials = algebraic_starting_monomials(eq.poly(), eq.constraint());
  std::sort(monomials.begin(), monomials.end());
  for (const auto& m : monomials) {
    const ResiduePoly d = dominant_part(mul_conjugate_power(eq.poly(), m));
    const ResidueSolveReport report = residue_solve(d, eq.field());
    for (const auto& r : report.roots) {
      const unsigned mult = d.add_conjugate(r).mul_at_zero();
      if (mult >= min_multiplicity) out.solutions.push_back(ApproxSolution{m, r, mult});
    }
    if (!report.complete) out.unsolved.push_back(UnsolvedMonomial{m, d.degree(), report.reason});
  }
  return out;
}

UnravelledCheck is_unravelled(const ADE& eq) {
  const unsigned d = ddeg_of(eq);
  if (d == 0) throw DomainError("unravelledness needs dominant degree >= 1");
  UnravelledCheck out;
  out.value = true;
  const ApproxEnumeration en = enumerate_approx_solutions(eq, d);
  if (!en.solutions.empty()) out.value = false;
  for (const auto& u : en.unsolved) {
    if (u.residue_degree >= d) {
      out.value = false;
      const std::string at = u.exponent.is_zero() ? std::string("1") : render_power(u.exponent);
      out.warnings.push_back("residue equation at " + at + " not fully solved: " + u.reason);
    }
  }

  // Between equalizers D_{P×t^γ} is homogeneous; look there for roots that
  // only derivative monomials make possible.
  const NewtonDiagram diagram = newton_diagram(eq.poly(), EConstraint::all());
  const auto& alphas = diagram.equalizers;
  for (std::size_t m = 0; m <= alphas.size(); ++m) {
    if (diagram.i_sequence[m] < d) continue;
    const std::optional<Rational> lo = m < alphas.size() ? std::optional<Rational>(alphas[m]) : std::nullopt;
    const std::optional<Rational> hi = m > 0 ? std::optional<Rational>(alphas[m - 1]) : std::nullopt;
    const auto gamma = sample_in(lo, hi, eq.constraint());
    if (!gamma) continue;
    const ResiduePoly dp = dominant_part(mul_conjugate_power(eq.poly(), GroupElement::scalar(*gamma)));
    const ResidueSolveReport report = residue_solve(dp, eq.field());
    std::vector<ResidueElem> roots = report.roots;
    if (report.derivative_dominant) roots.emplace_back(1);
    for (const auto& r : roots) {
      if (dp.add_conjugate(r).mul_at_zero() >= d) {
        out.value = false;
        out.warnings.push_back("non-algebraic approximate solution " + render_term(r, render_power(GroupElement::scalar(*gamma))) +
                               " of full multiplicity");
        break;
      }
    }
    if (!report.complete && !report.derivative_dominant && dp.degree() >= d) {
      out.value = false;
      out.warnings.push_back("homogeneous residue equation between equalizers not fully solved: " + report.reason);
    }
  }
  return out;
}

std::string to_string(UnravelStatus s) {
  switch (s) {
    case UnravelStatus::Unravelled: return "Unravelled";
    case UnravelStatus::DepthExceeded: return "DepthExceeded";
    case UnravelStatus::ResidueUnsolvable: return "ResidueUnsolvable";
    case UnravelStatus::ExactMultiplicityHit: return "ExactMultiplicityHit";
  }
  return "?";
}

UnravelResult unravel(const ADE& eq, unsigned depth) {
  const unsigned d = ddeg_of(eq);
  if (d == 0) throw DomainError("unravelling needs dominant degree >= 1");
  UnravelResult out{Series(eq.field()), eq.constraint(), UnravelStatus::Unravelled, 0, {}};
  ADE cur = eq;
  while (true) {
    if (cur.poly().mul_at_zero() == d) {
      out.status = UnravelStatus::ExactMultiplicityHit;
      return out;
    }
    const ApproxEnumeration en = enumerate_approx_solutions(cur, d);
    if (en.solutions.empty()) {
      const UnravelledCheck check = is_unravelled(cur);
      out.warnings = check.warnings;
      out.status = check ? UnravelStatus::Unravelled : UnravelStatus::ResidueUnsolvable;
      return out;
    }
    if (out.steps == depth) {
      out.status = UnravelStatus::DepthExceeded;
      return out;
    }
    const ApproxSolution& s = en.solutions.front();
    const Series y = s.value(eq.field());
    const EConstraint next = EConstraint::val_gt(s.exponent);
    cur = refine(cur, y, next);
    out.f = out.f + y;
    out.constraint = next;
    ++out.steps;
    if (ddeg_of(cur) != d) throw Error("unravelling lost the dominant degree at step " + std::to_string(out.steps));
  }
}

ADE shift_multiplicative(const Series& a, const ADE& eq, std::optional<GroupElement> inverse_precision) {
  if (a.is_exact_zero()) throw DomainError("multiplicative shift by zero");
  const GroupElement va = a.valuation().finite();
  Series inv(eq.field());
  if (a.is_exact() && a.terms().size() == 1) {
    inv = a.invert(-va);
  } else if (inverse_precision) {
    inv = a.invert(*inverse_precision);
  } else {
    throw DomainError("shifting by a non-monomial needs a precision for its inverse");
  }
  return ADE(eq.poly().mul_conjugate(inv), shift_constraint(eq.constraint(), va));
}

std::string to_string(VanishVerdict v) {
  switch (v) {
    case VanishVerdict::Vanishes: return "vanishes";
    case VanishVerdict::NotVanishing: return "not-vanishing";
    case VanishVerdict::Uncertifiable: return "uncertifiable";
  }
  return "?";
}

std::vector<WitnessResult> vanishes_along(const DiffPoly& p, const CutChain& chain, const std::vector<Witness>& witnesses) {
  if (chain.points.empty()) throw DomainError("empty cut chain");
  // v(ℓ - last point) exceeds the last known step, or equals the tail step
  std::optional<GroupElement> last_step;
  for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
    last_step = (chain.points[k + 1] - chain.points[k]).valuation().finite();
  }
  const Series& last = chain.points.back();
  std::vector<WitnessResult> out;
  for (const auto& w : witnesses) {
    WitnessResult r;
    if (w.v.is_exact_zero()) {
      r.reason = "witness monomial is zero";
      out.push_back(r);
      continue;
    }
    const GroupElement vv = w.v.valuation().finite();
    const Series gap = w.a - last;
    const bool near_last = gap.is_exact_zero() || gap.valuation_lower_bound() > ExtGroupElement(vv);
    bool limit_close = false;
    if (chain.tail_step) {
      limit_close = *chain.tail_step > vv;
    } else if (last_step) {
      limit_close = *last_step >= vv;
    }
    if (!near_last || !limit_close) {
      r.reason = "cannot certify a - l < v at the chain's precision";
      out.push_back(r);
      continue;
    }
    const unsigned dd = dmul_at(p.add_conjugate(w.a), vv);
    r.ddeg = dd;
    r.verdict = dd >= 1 ? VanishVerdict::Vanishes : VanishVerdict::NotVanishing;
    out.push_back(r);
  }
  return out;
}

}  // namespace adenewton
