#include "adenewton/residue.hpp"

#include "adenewton/errors.hpp"

namespace adenewton {

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly::constant(Rational(1));
    return;
  }
  const QPoly g = gcd(num, den);
  num = exact_quotient(num, g);
  den = exact_quotient(den, g);
  const Rational lc = den.lc();
  num_ = num.scaled(1 / lc);
  den_ = den.scaled(1 / lc);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by zero in Q(z)");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
  // (n/d)' = (n' d - n d') / d^2
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFunc::to_string() const {
  const std::string n = adenewton::to_string(num_, "z");
  if (den_.degree() == 0) return n;
  const std::string d = adenewton::to_string(den_, "z");
  const bool n_simple = num_.degree() <= 0 || (num_.coeffs().size() >= 1 && [&] {
                          int nonzero = 0;
                          for (const auto& c : num_.coeffs()) nonzero += sgn(c) != 0;
                          return nonzero == 1 && sgn(num_.lc()) > 0;
                        }());
  int den_terms = 0;
  for (const auto& c : den_.coeffs()) den_terms += sgn(c) != 0;
  const std::string dd = den_terms == 1 && den_.lc() == 1 ? d : "(" + d + ")";
  return (n_simple ? n : "(" + n + ")") + "/" + dd;
}

ResidueElem::ResidueElem(RatFunc f) {
  if (f.is_constant()) {
    v_ = f.constant_value();
  } else {
    v_ = std::move(f);
  }
}

const Rational& ResidueElem::rational() const {
  if (!is_rational()) throw DomainError("residue element " + to_string() + " is not a constant");
  return std::get<Rational>(v_);
}

RatFunc ResidueElem::as_ratfunc() const {
  if (is_rational()) return RatFunc(std::get<Rational>(v_));
  return std::get<RatFunc>(v_);
}

bool ResidueElem::is_zero() const { return is_rational() && sgn(std::get<Rational>(v_)) == 0; }

bool ResidueElem::is_one() const { return is_rational() && std::get<Rational>(v_) == 1; }

ResidueElem ResidueElem::operator-() const {
  if (is_rational()) return ResidueElem(Rational(-std::get<Rational>(v_)));
  return ResidueElem(-std::get<RatFunc>(v_));
}

ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
  if (a.is_rational() && b.is_rational()) return ResidueElem(Rational(std::get<Rational>(a.v_) + std::get<Rational>(b.v_)));
  return ResidueElem(a.as_ratfunc() + b.as_ratfunc());
}

ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) {
  if (a.is_rational() && b.is_rational()) return ResidueElem(Rational(std::get<Rational>(a.v_) - std::get<Rational>(b.v_)));
  return ResidueElem(a.as_ratfunc() - b.as_ratfunc());
}

ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
  if (a.is_rational() && b.is_rational()) return ResidueElem(Rational(std::get<Rational>(a.v_) * std::get<Rational>(b.v_)));
  return ResidueElem(a.as_ratfunc() * b.as_ratfunc());
}

ResidueElem operator/(const ResidueElem& a, const ResidueElem& b) {
  if (b.is_zero()) throw DomainError("division by zero in the residue field");
  if (a.is_rational() && b.is_rational()) return ResidueElem(Rational(std::get<Rational>(a.v_) / std::get<Rational>(b.v_)));
  return ResidueElem(a.as_ratfunc() / b.as_ratfunc());
}

ResidueElem ResidueElem::derive() const {
  if (is_rational()) return ResidueElem();
  return ResidueElem(std::get<RatFunc>(v_).derivative());
}

namespace {

std::strong_ordering compare_qpoly(const QPoly& a, const QPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (auto c = compare(a.coeffs()[i], b.coeffs()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const ResidueElem& a, const ResidueElem& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_rational()) return compare(std::get<Rational>(a.v_), std::get<Rational>(b.v_));
  const auto& fa = std::get<RatFunc>(a.v_);
  const auto& fb = std::get<RatFunc>(b.v_);
  if (auto c = compare_qpoly(fa.den(), fb.den()); c != 0) return c;
  return compare_qpoly(fa.num(), fb.num());
}

std::string ResidueElem::to_string() const {
  if (is_rational()) return adenewton::to_string(std::get<Rational>(v_));
  return std::get<RatFunc>(v_).to_string();
}

bool ResidueElem::is_compound() const {
  if (is_rational()) return false;
  const auto& f = std::get<RatFunc>(v_);
  if (f.den().degree() > 0) return true;
  int nonzero = 0;
  for (const auto& c : f.num().coeffs()) nonzero += sgn(c) != 0;
  return nonzero > 1;
}

}  // namespace adenewton
