#include "adenewton/newton.hpp"

#include <algorithm>
#include <set>

#include "adenewton/errors.hpp"
#include "adenewton/residue_solve.hpp"

namespace adenewton {

namespace {

void require_rank_one(const Field& f, const char* what) {
  if (f.dim() != 1) {
    throw DimensionMismatch(std::string(what) + " needs the value group Q; got dimension " + std::to_string(f.dim()));
  }
}

// Y-index -> shift -> polynomial in γ
using SymPoly = std::map<MultiIndex, std::map<Rational, QPoly>>;

MultiIndex add_index(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return make_index(std::move(out));
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [ia, sa] : a) {
    for (const auto& [ib, sb] : b) {
      auto& slot = out[add_index(ia, ib)];
      for (const auto& [ma, qa] : sa) {
        for (const auto& [mb, qb] : sb) {
          auto& q = slot[ma + mb];
          q = q + qa * qb;
        }
      }
    }
  }
  return out;
}

// (t^γ)^(m) = p_m(γ) t^(γ + m·step)
std::vector<QPoly> derivative_factors(const Field& f, unsigned up_to) {
  std::vector<QPoly> p{QPoly::constant(Rational(1))};
  for (unsigned m = 1; m <= up_to; ++m) {
    if (f.kind() == PresetKind::Monotone) {
      p.emplace_back();
    } else {
      const QPoly factor = QPoly::variable() + QPoly::constant(Rational(m - 1));
      p.push_back(-(factor * p.back()));
    }
  }
  return p;
}

GroupElement scalar(const Rational& q) { return GroupElement::scalar(q); }

}  // namespace

VPFunction::VPFunction(const DiffPoly& p) {
  require_rank_one(p.context(), "the valuation function v_P");
  if (p.is_zero()) throw DomainError("v_P of the zero differential polynomial");
  if (!p.is_homogeneous()) throw DomainError("v_P needs a homogeneous differential polynomial, got " + p.to_string());
  degree_ = p.degree();
  hidden_ = p.floor();
  const unsigned r = p.ord();
  const std::vector<QPoly> pm = derivative_factors(p.context(), r);

  // L_j = Σ_k binom(j,k) p_{j-k}(γ) t^(j-k) Y^(k), with the common factor t^γ pulled out
  std::vector<std::vector<SymPoly>> powers(r + 1);
  for (unsigned j = 0; j <= r; ++j) {
    SymPoly l;
    for (unsigned k = 0; k <= j; ++k) {
      const QPoly coeff = pm[j - k].scaled(Rational(binomial(j, k)));
      if (coeff.is_zero()) continue;
      MultiIndex idx(k + 1, 0);
      idx[k] = 1;
      l[idx][Rational(j - k)] = coeff;
    }
    powers[j] = {SymPoly{{MultiIndex{}, {{Rational(0), QPoly::constant(Rational(1))}}}}, l};
  }

  std::map<Rational, std::map<MultiIndex, GammaPoly>> acc;
  for (const auto& [i, c] : p.terms()) {
    hidden_ = min(hidden_, c.precision());
    SymPoly s = powers[0][0];
    for (std::size_t k = 0; k < i.size(); ++k) {
      auto& pw = powers[k];
      while (pw.size() <= i[k]) pw.push_back(sym_mul(pw.back(), pw[1]));
      s = sym_mul(s, pw[i[k]]);
    }
    for (const auto& [j, shifts] : s) {
      for (const auto& [m, q] : shifts) {
        if (q.is_zero()) continue;
        std::vector<ResidueElem> qc(q.coeffs().begin(), q.coeffs().end());
        const GammaPoly gq(std::move(qc));
        for (const auto& [e, rc] : c.terms()) {
          auto& slot = acc[e.value() + m][j];
          slot = slot + gq.scaled(rc);
        }
      }
    }
  }
  for (auto& [shift, by_index] : acc) {
    if (hidden_.is_finite() && shift >= hidden_.finite().value()) continue;
    std::vector<GammaPoly> polys;
    for (auto& [j, g] : by_index) {
      if (!g.is_zero()) polys.push_back(std::move(g));
    }
    if (!polys.empty()) pieces_.emplace(shift, std::move(polys));
  }
  if (!pieces_.empty()) exceptional_ = rational_roots_over_qz(pieces_.begin()->second);
}

std::vector<Rational> VPFunction::intercepts() const {
  std::vector<Rational> out;
  for (const auto& [s, polys] : pieces_) out.push_back(s);
  return out;
}

const Rational& VPFunction::generic_intercept() const {
  if (pieces_.empty()) throw BelowPrecision(hidden_.finite().to_string());
  return pieces_.begin()->first;
}

Rational VPFunction::operator()(const Rational& gamma) const {
  const ResidueElem g(gamma);
  for (const auto& [shift, polys] : pieces_) {
    for (const auto& poly : polys) {
      if (!poly.evaluate(g).is_zero()) return Rational(degree_) * gamma + shift;
    }
  }
  if (hidden_.is_finite()) {
    throw BelowPrecision((GroupElement::scalar(Rational(degree_) * gamma) + hidden_.finite()).to_string());
  }
  throw DomainError("v_P evaluated to infinity");
}

GroupElement equalizer(const DiffPoly& p, const DiffPoly& q) {
  require_rank_one(p.context(), "equalizer");
  require_same_field(p.context(), q.context());
  if (p.is_zero() || q.is_zero()) throw DomainError("equalizer of a zero differential polynomial");
  if (p.degree() == q.degree()) throw DomainError("equalizer needs different degrees, both are " + std::to_string(p.degree()));
  const VPFunction vp(p);
  const VPFunction vq(q);
  const Rational slope = Rational(vp.degree()) - Rational(vq.degree());
  std::set<Rational> candidates;
  for (const auto& sp : vp.intercepts()) {
    for (const auto& sq : vq.intercepts()) candidates.insert((sq - sp) / slope);
  }
  std::optional<BelowPrecision> hidden;
  for (const auto& alpha : candidates) {
    try {
      if (vp(alpha) != vq(alpha)) continue;
    } catch (const BelowPrecision& e) {
      if (!hidden) hidden = e;
      continue;
    }
    const GroupElement a = scalar(alpha);
    const ExtGroupElement direct_p = v_of(mul_conjugate_power(p, a));
    const ExtGroupElement direct_q = v_of(mul_conjugate_power(q, a));
    if (direct_p != direct_q || direct_p != ExtGroupElement(scalar(vp(alpha)))) {
      throw Error("equalizer verification by direct conjugation failed at " + to_string(alpha));
    }
    return a;
  }
  if (hidden) throw *hidden;
  throw Error("no equalizer found among the candidate breakpoints");
}

GroupElement equalizer(const DiffPoly& p, unsigned i, unsigned j) {
  return equalizer(p.homogeneous_part(i), p.homogeneous_part(j));
}

NewtonDiagram newton_diagram(const DiffPoly& p, const EConstraint& e) {
  require_rank_one(p.context(), "the Newton diagram");
  if (p.is_zero()) throw DomainError("Newton diagram of the zero differential polynomial");
  std::map<unsigned, DiffPoly> parts;
  for (const auto& [i, c] : p.terms()) {
    const unsigned d = index_degree(i);
    if (!parts.count(d)) parts.emplace(d, p.homogeneous_part(d));
  }
  const unsigned low = p.mul_at_zero();
  unsigned d = ddeg_on(p, e);
  std::vector<unsigned> seq{d};
  std::vector<Rational> eqs;
  while (d > low) {
    std::optional<unsigned> best;
    Rational best_alpha;
    for (const auto& [i, part] : parts) {
      if (i >= d) break;
      const Rational alpha = equalizer(part, parts.at(d)).value();
      if (!best || alpha < best_alpha) {
        best = i;
        best_alpha = alpha;
      }
    }
    seq.push_back(*best);
    eqs.push_back(best_alpha);
    d = *best;
  }
  std::reverse(seq.begin(), seq.end());
  std::reverse(eqs.begin(), eqs.end());
  return NewtonDiagram{std::move(seq), std::move(eqs)};
}

DdegProfile ddeg_profile(const NewtonDiagram& diagram, const Rational& gamma) {
  const auto& i = diagram.i_sequence;
  const auto& a = diagram.equalizers;  // a[m-1] = α_m
  const std::size_t n = a.size();
  DdegProfile out{i[n], i[n]};
  for (std::size_t m = 0; m < n; ++m) {
    if (gamma >= a[m]) {
      out.dmul = i[m];
      break;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (gamma > a[m]) {
      out.ddeg = i[m];
      break;
    }
  }
  return out;
}

DdegProfile ddeg_profile(const DiffPoly& p, const GroupElement& gamma) {
  return ddeg_profile(newton_diagram(p, EConstraint::all()), gamma.value());
}

std::vector<GroupElement> algebraic_starting_monomials(const DiffPoly& p, const EConstraint& e) {
  const NewtonDiagram diagram = newton_diagram(p, e);
  std::vector<GroupElement> out;
  for (const auto& alpha : diagram.equalizers) {
    const GroupElement g = scalar(alpha);
    if (e.contains(g)) out.push_back(g);
  }
  return out;
}

ChainDdeg ddeg_along_chain(const DiffPoly& p, const CutChain& chain) {
  if (chain.points.empty()) throw DomainError("empty cut chain");
  std::vector<GroupElement> steps;
  for (std::size_t k = 0; k + 1 < chain.points.size(); ++k) {
    const Series diff = chain.points[k + 1] - chain.points[k];
    const ExtGroupElement v = diff.valuation();
    if (v.is_infinite()) throw DomainError("cut chain repeats a point");
    if (!steps.empty() && !(v.finite() > steps.back())) {
      throw DomainError("cut chain steps must be strictly increasing, got " + steps.back().to_string() + " then " +
                        v.finite().to_string());
    }
    steps.push_back(v.finite());
  }
  if (chain.tail_step) {
    if (!steps.empty() && !(*chain.tail_step > steps.back())) {
      throw DomainError("tail step must exceed the last chain step " + steps.back().to_string());
    }
    steps.push_back(*chain.tail_step);
  } else if (!steps.empty()) {
    steps.push_back(steps.back());
  }
  ChainDdeg out;
  for (std::size_t k = 0; k < chain.points.size(); ++k) {
    const DiffPoly shifted = p.add_conjugate(chain.points[k]);
    out.sequence.push_back(steps.empty() ? shifted.degree() : ddeg_at(shifted, steps[k]));
  }
  const std::size_t n = out.sequence.size();
  out.value = out.sequence.back();
  out.stabilized = n >= 2 && out.sequence[n - 1] == out.sequence[n - 2];
  return out;
}

}  // namespace adenewton
