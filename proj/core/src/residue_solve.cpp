#include "adenewton/residue_solve.hpp"

#include <algorithm>
#include <set>

#include "adenewton/errors.hpp"

namespace adenewton {

ResidueUPoly algebraic_part(const ResiduePoly& d) {
  std::vector<ResidueElem> coeffs;
  for (const auto& [i, c] : d.terms()) {
    if (i.size() > 1) continue;
    const std::size_t k = i.empty() ? 0 : i[0];
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = coeffs[k] + c;
  }
  return ResidueUPoly(std::move(coeffs));
}

bool has_derivatives(const ResiduePoly& d) {
  return std::any_of(d.terms().begin(), d.terms().end(), [](const auto& t) { return t.first.size() > 1; });
}

std::vector<Rational> rational_roots_over_qz(const std::vector<ResidueUPoly>& family) {
  std::vector<QPoly> rational_family;
  for (const auto& g : family) {
    QPoly den = QPoly::constant(Rational(1));
    for (const auto& c : g.coeffs()) {
      const QPoly d = c.as_ratfunc().den();
      den = exact_quotient(den * d, gcd(den, d));
    }
    std::vector<QPoly> numerators;
    std::size_t zlen = 0;
    for (const auto& c : g.coeffs()) {
      const RatFunc r = c.as_ratfunc();
      numerators.push_back(r.num() * exact_quotient(den, r.den()));
      zlen = std::max(zlen, numerators.back().coeffs().size());
    }
    for (std::size_t k = 0; k < zlen; ++k) {
      std::vector<Rational> cs;
      for (const auto& n : numerators) cs.push_back(n.coeff(k));
      QPoly q(cs);
      if (!q.is_zero()) rational_family.push_back(std::move(q));
    }
  }
  if (rational_family.empty()) throw DomainError("every rational is a root of the zero polynomial");
  return common_rational_roots(rational_family);
}

namespace {

std::optional<Rational> sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer n = q.get_num();
  const Integer d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return make_rational(Integer(sqrt(n)), Integer(sqrt(d)));
}

std::optional<QPoly> sqrt_qpoly(const QPoly& p) {
  if (p.is_zero()) return QPoly();
  const auto root_lc = sqrt_rational(p.lc());
  if (!root_lc) return std::nullopt;
  QPoly out = QPoly::constant(*root_lc);
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    if (m % 2 != 0) return std::nullopt;
    for (unsigned k = 0; k < m / 2; ++k) out = out * f;
  }
  return out;
}

void push_root(std::vector<ResidueElem>& roots, ResidueElem r) { roots.push_back(std::move(r)); }

// Roots in Q(z) of a nonzero polynomial over Q(z); returns completeness.
bool roots_over_qz(const ResidueUPoly& a, std::vector<ResidueElem>& roots, std::string& reason) {
  bool complete = true;
  for (const auto& [factor, mult] : squarefree_decomposition(a)) {
    ResidueUPoly f = factor;
    if (f.degree() >= 3) {
      for (const auto& c : rational_roots_over_qz({f})) {
        push_root(roots, ResidueElem(c));
        f = exact_quotient(f, ResidueUPoly({ResidueElem(Rational(-c)), ResidueElem(1)}));
      }
    }
    if (f.degree() == 1) {
      push_root(roots, -f.coeff(0) / f.coeff(1));
    } else if (f.degree() == 2) {
      const ResidueElem a2 = f.coeff(2);
      const ResidueElem a1 = f.coeff(1);
      const ResidueElem a0 = f.coeff(0);
      const ResidueElem disc = a1 * a1 - ResidueElem(4) * a2 * a0;
      if (auto s = sqrt_residue(disc)) {
        push_root(roots, (-a1 + *s) / (ResidueElem(2) * a2));
        push_root(roots, (-a1 - *s) / (ResidueElem(2) * a2));
      }
    } else if (f.degree() >= 3) {
      complete = false;
      reason = "squarefree factor of degree " + std::to_string(f.degree()) + " over Q(z) without rational roots";
    }
  }
  return complete;
}

// Polynomial solutions of sum_j a_j y^(j) = -c over Q(z), y of degree <= bound.
std::optional<QPoly> polynomial_ansatz(const ResiduePoly& d, unsigned& bound_out, bool& unique) {
  QPoly den = QPoly::constant(Rational(1));
  for (const auto& [i, c] : d.terms()) {
    const QPoly q = c.as_ratfunc().den();
    den = exact_quotient(den * q, gcd(den, q));
  }
  QPoly rhs;
  std::vector<QPoly> a(d.ord() + 1);
  int max_deg = 0;
  for (const auto& [i, c] : d.terms()) {
    const RatFunc r = c.as_ratfunc();
    const QPoly scaled = r.num() * exact_quotient(den, r.den());
    max_deg = std::max(max_deg, scaled.degree());
    if (i.empty()) {
      rhs = -scaled;
    } else {
      a[i.size() - 1] = scaled;
    }
  }
  const unsigned n = static_cast<unsigned>(max_deg) + 2;
  bound_out = n;
  const std::size_t rows = n + static_cast<std::size_t>(max_deg) + 1;
  const std::size_t cols = n + 1;
  // matrix[m][k] = coefficient of z^m contributed by y_k z^k; last column the right-hand side
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t j = 0; j < a.size() && j <= k; ++j) {
      if (a[j].is_zero()) continue;
      Rational falling(1);
      for (std::size_t s = 0; s < j; ++s) falling *= Rational(static_cast<long>(k - s));
      for (std::size_t e = 0; e < a[j].coeffs().size(); ++e) {
        const std::size_t row = e + k - j;
        if (row < rows) m[row][k] += a[j].coeffs()[e] * falling;
      }
    }
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = rhs.coeff(r);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || sgn(m[q][c]) == 0) continue;
      const Rational f = m[q][c];
      for (std::size_t x = 0; x <= cols; ++x) m[q][x] -= f * m[r][x];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (sgn(m[q][cols]) != 0) return std::nullopt;
  }
  unique = pivot_cols.size() == cols;
  std::vector<Rational> y(cols);
  for (std::size_t q = 0; q < pivot_cols.size(); ++q) y[pivot_cols[q]] = m[q][cols];
  return QPoly(y);
}

}  // namespace

std::optional<ResidueElem> sqrt_residue(const ResidueElem& x) {
  if (x.is_rational()) {
    if (auto s = sqrt_rational(x.rational())) return ResidueElem(*s);
    return std::nullopt;
  }
  const RatFunc f = x.as_ratfunc();
  const auto n = sqrt_qpoly(f.num());
  const auto d = sqrt_qpoly(f.den());
  if (!n || !d) return std::nullopt;
  return ResidueElem(RatFunc(*n, *d));
}

ResidueSolveReport residue_solve(const ResiduePoly& d, const Field& field, bool nonzero_only) {
  if (d.is_zero()) throw DomainError("residue equation with zero left-hand side");
  ResidueSolveReport report;
  const ResidueUPoly alg = algebraic_part(d);

  if (field.rational_residues()) {
    report.fragment = "algebraic-rational-roots";
    if (alg.is_zero()) {
      report.derivative_dominant = true;
      report.reason = "derivative-dominant residue equation";
      return report;
    }
    std::vector<Rational> qc;
    for (const auto& c : alg.coeffs()) qc.push_back(c.rational());
    try {
      for (const auto& [r, m] : rational_roots(QPoly(qc))) report.roots.emplace_back(r);
      report.complete = true;
    } catch (const DomainError& e) {
      report.reason = e.what();
    }
  } else if (!has_derivatives(d)) {
    report.fragment = alg.degree() == 1 ? "linear" : "algebraic-rational-function-roots";
    report.complete = roots_over_qz(alg, report.roots, report.reason);
  } else if (d.degree() <= 1) {
    report.fragment = "first-order-linear-ansatz";
    unsigned bound = 0;
    bool unique = false;
    if (auto y = polynomial_ansatz(d, bound, unique)) {
      report.roots.emplace_back(RatFunc(*y));
      report.reason = unique ? "unique polynomial solution of degree <= " + std::to_string(bound)
                             : "one of several polynomial solutions of degree <= " + std::to_string(bound);
    } else {
      report.reason = "no polynomial solution of degree <= " + std::to_string(bound);
    }
  } else {
    report.fragment = "constant-roots";
    report.reason = "nonlinear differential residue equation; only constant roots are searched";
    if (alg.is_zero()) {
      report.derivative_dominant = true;
    } else {
      try {
        for (const auto& c : rational_roots_over_qz({alg})) report.roots.emplace_back(c);
      } catch (const DomainError& e) {
        report.reason = e.what();
      }
    }
  }

  std::set<ResidueElem> distinct(report.roots.begin(), report.roots.end());
  report.roots.clear();
  for (const auto& r : distinct) {
    if (nonzero_only && r.is_zero()) continue;
    if (!d.evaluate(r).is_zero()) throw Error("residue root " + r.to_string() + " fails verification");
    report.roots.push_back(r);
  }
  return report;
}

}  // namespace adenewton
