#include "adenewton/valgroup.hpp"

#include "adenewton/errors.hpp"

namespace adenewton {

namespace {

void require_same_dim(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("group elements of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

GroupElement::GroupElement(std::size_t dim) : coords_(dim) {
  if (dim == 0) throw DomainError("value group dimension must be at least 1");
}

GroupElement::GroupElement(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("value group dimension must be at least 1");
}

GroupElement GroupElement::scalar(const Rational& q) { return GroupElement(std::vector<Rational>{q}); }

GroupElement GroupElement::unit(std::size_t dim, std::size_t index) {
  GroupElement g(dim);
  g.coords_.at(index) = 1;
  return g;
}

const Rational& GroupElement::value() const {
  if (dim() != 1) throw DimensionMismatch("scalar value requested from a dimension-" + std::to_string(dim()) + " element");
  return coords_[0];
}

bool GroupElement::is_zero() const { return sign() == 0; }

int GroupElement::sign() const {
  for (const auto& c : coords_) {
    if (const int s = sgn(c); s != 0) return s;
  }
  return 0;
}

GroupElement GroupElement::operator-() const {
  GroupElement out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

GroupElement& GroupElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

GroupElement GroupElement::divided_by(unsigned long m) const {
  if (m == 0) throw DomainError("division of a group element by zero");
  return *this * Rational(1, m);
}

bool operator==(const GroupElement& a, const GroupElement& b) { return lex_compare(a, b) == 0; }

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) { return lex_compare(a, b); }

std::string GroupElement::to_string() const {
  if (dim() == 1) return adenewton::to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += adenewton::to_string(coords_[i]);
  }
  return out + ")";
}

std::strong_ordering lex_compare(const GroupElement& a, const GroupElement& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

const GroupElement& ExtGroupElement::finite() const {
  if (!value_) throw DomainError("infinite valuation has no finite value");
  return *value_;
}

ExtGroupElement operator+(const ExtGroupElement& a, const ExtGroupElement& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtGroupElement::infinity();
  return ExtGroupElement(*a.value_ + *b.value_);
}

bool operator==(const ExtGroupElement& a, const ExtGroupElement& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ExtGroupElement& a, const ExtGroupElement& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return lex_compare(*a.value_, *b.value_);
}

std::string ExtGroupElement::to_string() const { return value_ ? value_->to_string() : "inf"; }

ArchClass arch_class(const GroupElement& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (sgn(g[i]) != 0) return ArchClass{i};
  }
  throw DomainError("the zero element has no archimedean class");
}

bool is_little_o(const GroupElement& alpha, const GroupElement& beta) {
  require_same_dim(alpha, beta);
  if (beta.is_zero()) throw DomainError("is_little_o: beta must be nonzero");
  if (alpha.is_zero()) return true;
  return arch_class(alpha) < arch_class(beta);
}

bool in_gamma_phi(const GroupElement& g, const GroupElement& v_phi) {
  if (v_phi.is_zero()) throw DomainError("invalid coarsening: v(phi) = 0");
  return is_little_o(g, v_phi);
}

}  // namespace adenewton
