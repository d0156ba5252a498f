#include "adenewton/diffpoly.hpp"

#include <algorithm>
#include <type_traits>

#include "adenewton/errors.hpp"

namespace adenewton {

MultiIndex make_index(std::vector<unsigned> exps) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
  return exps;
}

unsigned index_degree(const MultiIndex& i) {
  unsigned d = 0;
  for (unsigned e : i) d += e;
  return d;
}

unsigned index_order(const MultiIndex& i) {
  const MultiIndex t = make_index(i);
  return t.empty() ? 0 : static_cast<unsigned>(t.size() - 1);
}

std::string render_index(const MultiIndex& i) {
  std::string out;
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (i[k] == 0) continue;
    const std::string name = "Y" + std::string(k, '\'');
    std::string factor;
    if (i[k] == 1) {
      factor = name;
    } else if (k == 0) {
      factor = name + "^" + std::to_string(i[k]);
    } else {
      factor = "(" + name + ")^" + std::to_string(i[k]);
    }
    out += out.empty() ? factor : "*" + factor;
  }
  return out;
}

namespace {

MultiIndex add_index(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return make_index(std::move(out));
}

MultiIndex unit_index(unsigned k) {
  MultiIndex out(k + 1, 0);
  out[k] = 1;
  return out;
}

std::string render_coeff_term(const Series& c, const std::string& mono) {
  if (mono.empty()) return c.to_string();
  if (c.is_exact() && c.terms().size() == 1) {
    const auto& [e, r] = *c.terms().begin();
    const std::string power = render_power(e);
    return render_term(r, power.empty() ? mono : power + "*" + mono);
  }
  return "(" + c.to_string() + ")*" + mono;
}

std::string render_coeff_term(const ResidueElem& c, const std::string& mono) { return render_term(c, mono); }

}  // namespace

template <class C>
DiffPolyT<C>::DiffPolyT(Context ctx, unsigned order_bound) : ctx_(std::move(ctx)), order_bound_(order_bound) {}

template <class C>
DiffPolyT<C> DiffPolyT<C>::constant(const Context& ctx, const C& c) {
  return monomial(ctx, MultiIndex{}, c);
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::variable(const Context& ctx, unsigned k) {
  return monomial(ctx, unit_index(k), Traits::from_integer(ctx, Integer(1)));
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::monomial(const Context& ctx, const MultiIndex& i, const C& c) {
  DiffPolyT p(ctx, index_order(i));
  p.add_term(i, c);
  return p;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::with_order_bound(unsigned r) const {
  DiffPolyT out(*this);
  out.order_bound_ = std::max(order_bound_, r);
  return out;
}

template <class C>
void DiffPolyT<C>::absorb(const MultiIndex& i, C c) {
  auto it = terms_.find(i);
  if (it != terms_.end()) {
    c = it->second + c;
    terms_.erase(it);
  }
  if (Traits::negligible(c)) {
    floor_ = min(floor_, Traits::floor_of(c));
    return;
  }
  terms_.emplace(i, std::move(c));
}

template <class C>
void DiffPolyT<C>::add_term(const MultiIndex& i, const C& c) {
  Traits::check(ctx_, c);
  const MultiIndex key = make_index(i);
  order_bound_ = std::max(order_bound_, index_order(key));
  absorb(key, c);
}

template <class C>
C DiffPolyT<C>::coefficient(const MultiIndex& i) const {
  auto it = terms_.find(make_index(i));
  return it == terms_.end() ? Traits::zero(ctx_) : it->second;
}

template <class C>
unsigned DiffPolyT<C>::degree() const {
  unsigned d = 0;
  for (const auto& [i, c] : terms_) d = std::max(d, index_degree(i));
  return d;
}

template <class C>
unsigned DiffPolyT<C>::mul_at_zero() const {
  if (is_zero()) throw DomainError("multiplicity of the zero differential polynomial");
  unsigned d = degree();
  for (const auto& [i, c] : terms_) d = std::min(d, index_degree(i));
  return d;
}

template <class C>
unsigned DiffPolyT<C>::ord() const {
  unsigned r = 0;
  for (const auto& [i, c] : terms_) r = std::max(r, index_order(i));
  return r;
}

template <class C>
Complexity DiffPolyT<C>::complexity() const {
  if (is_zero()) throw DomainError("complexity of the zero differential polynomial");
  Complexity out;
  out.order = ord();
  out.degree = degree();
  for (const auto& [i, c] : terms_) {
    if (i.size() > out.order) out.top_degree = std::max(out.top_degree, i[out.order]);
  }
  return out;
}

template <class C>
bool DiffPolyT<C>::is_homogeneous() const {
  return is_zero() || mul_at_zero() == degree();
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::homogeneous_part(unsigned d) const {
  DiffPolyT out(ctx_, order_bound_);
  for (const auto& [i, c] : terms_) {
    if (index_degree(i) == d) out.terms_.emplace(i, c);
  }
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::truncate_deg(unsigned d) const {
  DiffPolyT out(ctx_, order_bound_);
  for (const auto& [i, c] : terms_) {
    if (index_degree(i) <= d) out.terms_.emplace(i, c);
  }
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::above_deg(unsigned d) const {
  DiffPolyT out(ctx_, order_bound_);
  for (const auto& [i, c] : terms_) {
    if (index_degree(i) > d) out.terms_.emplace(i, c);
  }
  return out;
}

template <class C>
void DiffPolyT<C>::require_ctx(const DiffPolyT& o) const {
  if (!(ctx_ == o.ctx_)) throw PresetMismatch("differential polynomials over different fields");
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::operator-() const {
  DiffPolyT out(*this);
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::operator+(const DiffPolyT& o) const {
  require_ctx(o);
  DiffPolyT out(*this);
  out.order_bound_ = std::max(order_bound_, o.order_bound_);
  out.floor_ = min(floor_, o.floor_);
  for (const auto& [i, c] : o.terms_) out.absorb(i, c);
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::operator-(const DiffPolyT& o) const {
  return *this + (-o);
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::operator*(const DiffPolyT& o) const {
  require_ctx(o);
  DiffPolyT out(ctx_, std::max(order_bound_, o.order_bound_));
  for (const auto& [i, a] : terms_) {
    for (const auto& [j, b] : o.terms_) out.absorb(add_index(i, j), a * b);
  }
  if constexpr (std::is_same_v<C, Series>) {
    // a dropped coefficient O(t^p) times a coefficient of valuation w leaves O(t^(p+w))
    const auto lower = [](const DiffPolyT& p) {
      ExtGroupElement v = p.floor_;
      for (const auto& [i, c] : p.terms_) v = min(v, c.valuation_lower_bound());
      return v;
    };
    if (floor_.is_finite()) out.floor_ = min(out.floor_, floor_ + lower(o));
    if (o.floor_.is_finite()) out.floor_ = min(out.floor_, o.floor_ + lower(*this));
  }
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::scaled(const C& c) const {
  DiffPolyT out(ctx_, order_bound_);
  out.floor_ = floor_;
  if constexpr (std::is_same_v<C, Series>) {
    if (floor_.is_finite()) out.floor_ = floor_ + c.valuation_lower_bound();
  }
  for (const auto& [i, x] : terms_) out.absorb(i, x * c);
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::derive_poly() const {
  DiffPolyT out(ctx_, order_bound_ + 1);
  if constexpr (std::is_same_v<C, Series>) {
    if (floor_.is_finite()) out.floor_ = floor_ + ExtGroupElement(GroupElement(ctx_.dim()));
  }
  for (const auto& [i, c] : terms_) {
    out.absorb(i, Traits::derive(c));
    for (std::size_t k = 0; k < i.size(); ++k) {
      if (i[k] == 0) continue;
      MultiIndex j = i;
      j[k] -= 1;
      if (j.size() <= k + 1) j.resize(k + 2, 0);
      j[k + 1] += 1;
      out.absorb(make_index(std::move(j)), Traits::scale(c, Integer(i[k])));
    }
  }
  return out;
}

template <class C>
C DiffPolyT<C>::evaluate(const C& y) const {
  Traits::check(ctx_, y);
  const C one = Traits::from_integer(ctx_, Integer(1));
  const unsigned r = ord();
  std::vector<std::vector<C>> powers(r + 1);
  C deriv = y;
  for (unsigned k = 0; k <= r; ++k) {
    powers[k].push_back(one);
    if (k > 0) deriv = Traits::derive(deriv);
    powers[k].push_back(deriv);
  }
  C sum = Traits::zero(ctx_);
  for (const auto& [i, c] : terms_) {
    C term = c;
    for (std::size_t k = 0; k < i.size(); ++k) {
      auto& pw = powers[k];
      while (pw.size() <= i[k]) pw.push_back(pw.back() * pw[1]);
      term = term * pw[i[k]];
    }
    sum = sum + term;
  }
  if constexpr (std::is_same_v<C, Series>) {
    if (floor_.is_finite()) {
      ExtGroupElement lower = ExtGroupElement::infinity();
      for (const auto& pw : powers) lower = min(lower, pw[1].valuation_lower_bound());
      const ExtGroupElement mono_lower = min(lower, GroupElement(ctx_.dim()));
      // crude bound: the hidden terms have valuation at least floor + deg * min(v(y^(k)), 0)
      ExtGroupElement bound = floor_;
      if (mono_lower.is_finite() && mono_lower.finite().sign() < 0) {
        bound = floor_ + ExtGroupElement(mono_lower.finite() * Rational(degree()));
      }
      if (bound.is_finite()) sum = sum.truncated(bound.finite());
    }
  }
  return sum;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::add_conjugate(const C& a) const {
  Traits::check(ctx_, a);
  const C one = Traits::from_integer(ctx_, Integer(1));
  const unsigned r = ord();
  std::vector<std::vector<C>> powers(r + 1);
  C deriv = a;
  for (unsigned k = 0; k <= r; ++k) {
    if (k > 0) deriv = Traits::derive(deriv);
    powers[k] = {one, deriv};
  }
  DiffPolyT out(ctx_, order_bound_);
  out.floor_ = floor_;
  for (const auto& [j, c] : terms_) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      while (powers[k].size() <= j[k]) powers[k].push_back(powers[k].back() * powers[k][1]);
    }
    // Taylor: sum over i <= j of prod_k binom(j_k, i_k) (a^(k))^(j_k - i_k) Y^i
    MultiIndex i(j.size(), 0);
    while (true) {
      C coeff = c;
      for (std::size_t k = 0; k < j.size(); ++k) {
        coeff = Traits::scale(coeff * powers[k][j[k] - i[k]], binomial(j[k], i[k]));
      }
      out.absorb(make_index(i), coeff);
      std::size_t k = 0;
      while (k < j.size() && i[k] == j[k]) i[k++] = 0;
      if (k == j.size()) break;
      ++i[k];
    }
  }
  return out;
}

template <class C>
DiffPolyT<C> DiffPolyT<C>::mul_conjugate(const C& a) const {
  Traits::check(ctx_, a);
  if (Traits::negligible(a)) throw DomainError("multiplicative conjugation by zero");
  const unsigned r = ord();
  std::vector<C> derivs{a};
  for (unsigned k = 1; k <= r; ++k) derivs.push_back(Traits::derive(derivs.back()));
  const DiffPolyT one = constant(ctx_, Traits::from_integer(ctx_, Integer(1)));
  std::vector<std::vector<DiffPolyT>> powers(r + 1);
  for (unsigned j = 0; j <= r; ++j) {
    DiffPolyT l(ctx_, j);
    for (unsigned k = 0; k <= j; ++k) l.absorb(unit_index(k), Traits::scale(derivs[j - k], binomial(j, k)));
    powers[j] = {one, l};
  }
  DiffPolyT out(ctx_, order_bound_);
  out.floor_ = floor_;
  for (const auto& [i, c] : terms_) {
    DiffPolyT term = constant(ctx_, c);
    for (std::size_t k = 0; k < i.size(); ++k) {
      auto& pw = powers[k];
      while (pw.size() <= i[k]) pw.push_back(pw.back() * pw[1]);
      term = term * pw[i[k]];
    }
    out = out + term;
  }
  if constexpr (std::is_same_v<C, Series>) {
    if (floor_.is_finite()) {
      ExtGroupElement lower = ExtGroupElement::infinity();
      for (const auto& d : derivs) lower = min(lower, d.valuation_lower_bound());
      if (lower.is_finite() && lower.finite().sign() < 0) {
        out.floor_ = min(out.floor_, floor_ + ExtGroupElement(lower.finite() * Rational(degree())));
      } else {
        out.floor_ = min(out.floor_, floor_);
      }
    }
  }
  out.order_bound_ = order_bound_;
  return out;
}

template <class C>
bool DiffPolyT<C>::operator==(const DiffPolyT& o) const {
  return ctx_ == o.ctx_ && terms_ == o.terms_ && floor_ == o.floor_;
}

template <class C>
std::string DiffPolyT<C>::to_string() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) parts.push_back(render_coeff_term(it->second, render_index(it->first)));
  if (parts.empty()) return "0";
  return join_signed_terms(parts);
}

template <class C>
DiffPolyT<C> partial(const MultiIndex& i, const DiffPolyT<C>& p) {
  DiffPolyT<C> cur = p;
  for (std::size_t k = 0; k < i.size(); ++k) {
    for (unsigned step = 0; step < i[k]; ++step) {
      DiffPolyT<C> next(cur.context(), cur.order_bound());
      for (const auto& [j, c] : cur.terms()) {
        if (j.size() <= k || j[k] == 0) continue;
        MultiIndex reduced = j;
        reduced[k] -= 1;
        next.add_term(reduced, CoeffTraits<C>::scale(c, Integer(j[k])));
      }
      cur = std::move(next);
    }
  }
  return cur;
}

template class DiffPolyT<Series>;
template class DiffPolyT<ResidueElem>;
template DiffPoly partial(const MultiIndex&, const DiffPoly&);
template ResiduePoly partial(const MultiIndex&, const ResiduePoly&);

ExtGroupElement v_of(const DiffPoly& p) {
  ExtGroupElement v = ExtGroupElement::infinity();
  for (const auto& [i, c] : p.terms()) v = min(v, c.valuation_lower_bound());
  // the minimum is known only if it is attained by a stored term strictly below every hidden part
  bool attained = false;
  for (const auto& [i, c] : p.terms()) {
    if (c.has_terms() && ExtGroupElement(c.terms().begin()->first) == v) attained = true;
  }
  if (v.is_infinite() && p.floor().is_infinite()) return v;
  if (!attained || !(v < p.floor())) {
    const ExtGroupElement bound = min(v, p.floor());
    throw BelowPrecision(bound.finite().to_string());
  }
  return v;
}

ExtGroupElement v_lower_bound(const DiffPoly& p) {
  ExtGroupElement v = p.floor();
  for (const auto& [i, c] : p.terms()) v = min(v, c.valuation_lower_bound());
  return v;
}

DiffPoly shift_coefficients(const DiffPoly& p, const GroupElement& g) {
  DiffPoly out(p.context(), p.order_bound());
  for (const auto& [i, c] : p.terms()) out.add_term(i, c.shifted(g));
  if (p.floor().is_finite()) out = out + DiffPoly::constant(p.context(), Series::big_o(p.context(), (p.floor() + g).finite()));
  return out;
}

DiffPoly mul_conjugate_power(const DiffPoly& p, const GroupElement& g) {
  return p.mul_conjugate(Series::monomial(p.context(), g));
}

DiffPoly partial_mult_conjugated(const MultiIndex& i, const GroupElement& g, const DiffPoly& p) {
  return mul_conjugate_power(partial(i, mul_conjugate_power(p, g)), -g);
}

ResiduePoly residue_part(const DiffPoly& p, const GroupElement& at) {
  if (!(ExtGroupElement(at) < p.floor())) throw BelowPrecision(p.floor().finite().to_string());
  ResiduePoly out(ResidueContext{}, p.order_bound());
  for (const auto& [i, c] : p.terms()) {
    if (c.terms().begin()->first < at) {
      throw DomainError("coefficient of valuation " + c.terms().begin()->first.to_string() + " below " + at.to_string());
    }
    out.add_term(i, c.coefficient(at));
  }
  return out;
}

DiffPoly lift(const ResiduePoly& p, const Field& field) {
  DiffPoly out(field, p.order_bound());
  for (const auto& [i, c] : p.terms()) out.add_term(i, Series::constant(field, c));
  return out;
}

}  // namespace adenewton
