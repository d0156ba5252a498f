#include "adenewton/series.hpp"

#include <random>
#include <vector>

#include "adenewton/errors.hpp"

namespace adenewton {

namespace {

ExtGroupElement min3(const ExtGroupElement& a, const ExtGroupElement& b, const ExtGroupElement& c) {
  return min(min(a, b), c);
}

}  // namespace

std::string join_signed_terms(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (out.empty()) {
      out = p;
    } else if (!p.empty() && p[0] == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

std::string render_power(const GroupElement& g) {
  if (g.is_zero()) return "";
  if (g.dim() == 1) {
    const Rational& q = g.value();
    if (q == 1) return "t";
    if (q.get_den() == 1 && sgn(q) > 0) return "t^" + to_string(q);
    return "t^(" + to_string(q) + ")";
  }
  return "t^" + g.to_string();
}

std::string render_term(const ResidueElem& c, const std::string& body) {
  if (body.empty()) return c.to_string();
  if (c.is_one()) return body;
  if (c == ResidueElem(-1)) return "-" + body;
  if (c.is_compound()) return "(" + c.to_string() + ")*" + body;
  return c.to_string() + "*" + body;
}

Series::Series(Field field) : field_(field) {}

Series Series::constant(const Field& field, const ResidueElem& c) { return monomial(field, GroupElement(field.dim()), c); }

Series Series::monomial(const Field& field, const GroupElement& exponent, const ResidueElem& c) {
  if (exponent.dim() != field.dim()) throw DimensionMismatch("exponent dimension does not match the field preset");
  Series s(field);
  if (!c.is_zero()) s.terms_.emplace(exponent, c);
  return s;
}

Series Series::monomial(const Field& field, const Rational& q, const ResidueElem& c) {
  return monomial(field, GroupElement::scalar(q), c);
}

Series Series::big_o(const Field& field, const GroupElement& bound) {
  if (bound.dim() != field.dim()) throw DimensionMismatch("precision dimension does not match the field preset");
  Series s(field);
  s.precision_ = bound;
  return s;
}

Series Series::from_terms(const Field& field, TermMap terms, ExtGroupElement precision) {
  Series s(field);
  s.terms_ = std::move(terms);
  s.precision_ = std::move(precision);
  if (s.precision_.is_finite() && s.precision_.finite().dim() != field.dim()) {
    throw DimensionMismatch("precision dimension does not match the field preset");
  }
  for (const auto& [e, c] : s.terms_) {
    if (e.dim() != field.dim()) throw DimensionMismatch("exponent dimension does not match the field preset");
    if (!field.rational_residues()) continue;
    if (!c.is_rational()) throw PresetMismatch("h-type series coefficients must be rational");
  }
  s.normalize();
  return s;
}

void Series::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || ExtGroupElement(it->first) >= precision_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

bool Series::is_monomial() const { return is_exact() && terms_.size() == 1 && terms_.begin()->second.is_one(); }

ExtGroupElement Series::valuation() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (is_exact()) return ExtGroupElement::infinity();
  throw BelowPrecision(precision_.finite().to_string());
}

std::optional<ExtGroupElement> Series::known_valuation() const {
  if (!terms_.empty()) return ExtGroupElement(terms_.begin()->first);
  if (is_exact()) return ExtGroupElement::infinity();
  return std::nullopt;
}

ExtGroupElement Series::valuation_lower_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return precision_;
}

ResidueElem Series::coefficient(const GroupElement& exponent) const {
  if (ExtGroupElement(exponent) >= precision_) throw BelowPrecision(precision_.finite().to_string());
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ResidueElem() : it->second;
}

ResidueElem Series::residue() const {
  const GroupElement zero(field_.dim());
  if (!terms_.empty() && terms_.begin()->first < zero) {
    throw DomainError("residue of an element of negative valuation " + terms_.begin()->first.to_string());
  }
  return coefficient(zero);
}

std::pair<GroupElement, Series> Series::dominant_split() const {
  if (is_exact_zero()) throw DomainError("dominant monomial of zero");
  const GroupElement v = valuation().finite();
  return {v, shifted(-v)};
}

Series Series::operator-() const {
  Series out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Series operator+(const Series& a, const Series& b) {
  require_same_field(a.field_, b.field_);
  Series out(a.field_);
  out.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  out.precision_ = min(a.precision_, b.precision_);
  out.normalize();
  return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  require_same_field(a.field_, b.field_);
  Series out(a.field_);
  out.precision_ = min3(a.precision_ + b.valuation_lower_bound(), b.precision_ + a.valuation_lower_bound(),
                        a.precision_ + b.precision_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      GroupElement e = ea + eb;
      if (ExtGroupElement(e) >= out.precision_) break;
      auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.normalize();
  return out;
}

Series Series::scaled(const ResidueElem& c) const {
  if (field_.rational_residues() && !c.is_rational()) throw PresetMismatch("h-type series coefficients must be rational");
  Series out(field_);
  out.precision_ = precision_;
  if (c.is_zero()) {
    // 0 * O(t^p) is exactly 0
    out.precision_ = ExtGroupElement::infinity();
    return out;
  }
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

Series Series::shifted(const GroupElement& g) const {
  Series out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + g, c);
  out.precision_ = precision_ + ExtGroupElement(g);
  return out;
}

Series Series::truncated(const GroupElement& bound) const {
  Series out(*this);
  out.precision_ = min(precision_, ExtGroupElement(bound));
  out.normalize();
  return out;
}

Series Series::derive() const {
  Series out(field_);
  const std::size_t n = field_.dim();
  if (field_.kind() == PresetKind::Monotone) {
    for (const auto& [e, c] : terms_) {
      ResidueElem d = c.derive();
      if (!d.is_zero()) out.terms_.emplace(e, std::move(d));
    }
    out.precision_ = precision_;
    return out;
  }
  for (const auto& [e, c] : terms_) {
    GroupElement shift = GroupElement::unit(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) shift += GroupElement::unit(n, i);
      if (sgn(e[i]) == 0) continue;
      const ResidueElem term = c * ResidueElem(Rational(-e[i]));
      auto [it, inserted] = out.terms_.emplace(e + shift, term);
      if (!inserted) it->second += term;
    }
  }
  out.precision_ = precision_ + ExtGroupElement(GroupElement::unit(n, 0));
  out.normalize();
  return out;
}

Series Series::derive(unsigned times) const {
  Series out(*this);
  for (unsigned i = 0; i < times; ++i) out = out.derive();
  return out;
}

Series Series::invert(const GroupElement& out_precision) const {
  if (terms_.empty()) {
    if (is_exact()) throw DomainError("cannot invert zero");
    throw BelowPrecision(precision_.finite().to_string());
  }
  const auto& [v, c] = *terms_.begin();
  if (terms_.size() == 1 && is_exact()) return monomial(field_, -v, ResidueElem(1) / c);

  // a = c t^v (1 + r) with r infinitesimal
  const Series r = shifted(-v).scaled(ResidueElem(1) / c) - constant(field_, ResidueElem(1));
  const GroupElement target = out_precision + v;  // precision needed for the unit part
  Series sum = constant(field_, ResidueElem(1)).truncated(target);
  if (target.sign() > 0 && r.has_terms()) {
    const GroupElement vr = r.valuation().finite();
    if (arch_class(vr) < arch_class(target)) {
      throw DomainError("geometric series for the inverse cannot reach precision " + out_precision.to_string());
    }
    Series power = sum;
    const Series minus_r = (-r).truncated(target);
    while (power.has_terms()) {
      power = (power * minus_r).truncated(target);
      sum = sum + power;
    }
  } else {
    sum = (sum + r).truncated(target);
  }
  return sum.shifted(-v).scaled(ResidueElem(1) / c);
}

bool operator==(const Series& a, const Series& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_ && a.precision_ == b.precision_;
}

std::string Series::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [e, c] : terms_) parts.push_back(render_term(c, render_power(e)));
  if (precision_.is_finite()) {
    const std::string p = render_power(precision_.finite());
    parts.push_back("O(" + (p.empty() ? std::string("1") : p) + ")");
  }
  if (parts.empty()) return "0";
  return join_signed_terms(parts);
}

Dominance dominance(const Series& a, const Series& b) {
  require_same_field(a.field(), b.field());
  const auto va = a.known_valuation();
  const auto vb = b.known_valuation();
  if (!va || !vb) return Dominance::Incomparable;
  if (*va > *vb) return Dominance::Less;
  if (*va < *vb) return Dominance::Greater;
  if (va->is_infinite()) return Dominance::Asymptotic;
  const ExtGroupElement vd = (a - b).valuation_lower_bound();
  if (vd > *vb) return Dominance::Equivalent;
  return Dominance::Asymptotic;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "≺";
    case Dominance::Greater: return "≻";
    case Dominance::Asymptotic: return "≍";
    case Dominance::Equivalent: return "∼";
    case Dominance::Incomparable: return "incomparable-at-precision";
  }
  return "?";
}

CoarseDominance coarse_dominance(const GroupElement& va, const GroupElement& vb, const GroupElement& v_phi) {
  const GroupElement diff = va - vb;
  if (in_gamma_phi(diff, v_phi)) return CoarseDominance::Asymptotic;
  return diff.sign() > 0 ? CoarseDominance::Less : CoarseDominance::Greater;
}

CoarseDominance coarse_dominance(const Series& a, const Series& b, const GroupElement& v_phi) {
  require_same_field(a.field(), b.field());
  if (v_phi.is_zero()) throw DomainError("coarsening by an element of valuation 0");
  const ExtGroupElement va = a.valuation();
  const ExtGroupElement vb = b.valuation();
  if (va.is_infinite() || vb.is_infinite()) throw DomainError("coarse dominance of zero");
  return coarse_dominance(va.finite(), vb.finite(), v_phi);
}

namespace {

class Sampler {
 public:
  Sampler(const Field& field, std::uint64_t seed) : field_(field), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational nonzero_rational() {
    int p = 0;
    while (p == 0) p = uniform(-9, 9);
    return make_rational(p, uniform(1, 4));
  }

  ResidueElem coefficient() {
    if (field_.rational_residues() || uniform(0, 2) == 0) return nonzero_rational();
    QPoly num;
    const int deg = uniform(1, 3);
    for (int i = 0; i <= deg; ++i) num = num + QPoly::monomial(Rational(uniform(-3, 3)), static_cast<unsigned>(i));
    if (num.is_zero()) num = QPoly::variable();
    QPoly den = QPoly::constant(Rational(1));
    if (uniform(0, 3) == 0) den = QPoly::variable() + QPoly::constant(Rational(uniform(1, 3)));
    return ResidueElem(RatFunc(num, den));
  }

  GroupElement positive_exponent() {
    const std::size_t n = field_.dim();
    while (true) {
      std::vector<Rational> coords(n);
      for (auto& c : coords) c = make_rational(uniform(-4, 8), uniform(1, 3));
      GroupElement g(coords);
      if (g.sign() > 0) return g;
    }
  }

  Series infinitesimal() {
    Series::TermMap terms;
    const int count = uniform(1, 3);
    for (int i = 0; i < count; ++i) terms.emplace(positive_exponent(), coefficient());
    return Series::from_terms(field_, std::move(terms));
  }

 private:
  Field field_;
  std::mt19937_64 rng_;
};

}  // namespace

FieldCheckReport check_small_derivation(const Field& field, std::size_t samples, std::uint64_t seed) {
  FieldCheckReport report;
  report.property = "v(f') > 0 for f in the maximal ideal";
  Sampler sampler(field, seed);
  const ExtGroupElement zero = GroupElement(field.dim());
  for (std::size_t i = 0; i < samples; ++i) {
    const Series f = sampler.infinitesimal();
    const Series df = f.derive();
    ++report.samples;
    if (df.valuation_lower_bound() <= zero) {
      report.passed = false;
      report.counterexample = "f = " + f.to_string() + ", f' = " + df.to_string();
      return report;
    }
  }
  return report;
}

FieldCheckReport check_asymptotic(const Field& field, std::size_t samples, std::uint64_t seed) {
  FieldCheckReport report;
  report.property = "f < g <=> f' < g' for nonzero f, g in the maximal ideal";
  Sampler sampler(field, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Series f = sampler.infinitesimal();
    const Series g = sampler.infinitesimal();
    ++report.samples;
    const bool lhs = dominance(f, g) == Dominance::Less;
    const bool rhs = dominance(f.derive(), g.derive()) == Dominance::Less;
    if (lhs != rhs) {
      report.passed = false;
      report.counterexample = "f = " + f.to_string() + ", g = " + g.to_string() + ", f' = " + f.derive().to_string() +
                              ", g' = " + g.derive().to_string();
      return report;
    }
  }
  return report;
}

}  // namespace adenewton
