#pragma once

// Differential polynomials in one differential indeterminate Y, over either
// the series field (DiffPoly) or the residue field (ResiduePoly).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "adenewton/field.hpp"
#include "adenewton/residue.hpp"
#include "adenewton/series.hpp"

namespace adenewton {

/// Exponents (i_0, ..., i_s) of Y^i = Y^i0 (Y')^i1 ... (Y^(s))^is, stored
/// without trailing zeros. std::vector ordering then matches lexicographic
/// order on the zero-padded tuples.
using MultiIndex = std::vector<unsigned>;

MultiIndex make_index(std::vector<unsigned> exps);
unsigned index_degree(const MultiIndex& i);
/// Highest j with i_j > 0; 0 for the empty index.
unsigned index_order(const MultiIndex& i);
/// "Y", "Y'", "Y^2", "(Y')^3", "Y*Y''"; "" for the empty index.
std::string render_index(const MultiIndex& i);

struct Complexity {
  unsigned order = 0;
  unsigned top_degree = 0;
  unsigned degree = 0;
  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Series> {
  using Context = Field;
  static Series zero(const Field& f) { return Series(f); }
  static Series from_integer(const Field& f, const Integer& n) { return Series::constant(f, ResidueElem(Rational(n))); }
  /// No term is known below the precision.
  static bool negligible(const Series& s) { return !s.has_terms(); }
  static ExtGroupElement floor_of(const Series& s) { return s.precision(); }
  static Series derive(const Series& s) { return s.derive(); }
  static Series scale(const Series& s, const Integer& n) { return s.scaled(ResidueElem(Rational(n))); }
  static void check(const Field& f, const Series& s) { require_same_field(f, s.field()); }
};

struct ResidueContext {
  friend bool operator==(const ResidueContext&, const ResidueContext&) = default;
};

template <>
struct CoeffTraits<ResidueElem> {
  using Context = ResidueContext;
  static ResidueElem zero(const ResidueContext&) { return ResidueElem(); }
  static ResidueElem from_integer(const ResidueContext&, const Integer& n) { return ResidueElem(Rational(n)); }
  static bool negligible(const ResidueElem& c) { return c.is_zero(); }
  static ExtGroupElement floor_of(const ResidueElem&) { return ExtGroupElement::infinity(); }
  static ResidueElem derive(const ResidueElem& c) { return c.derive(); }
  static ResidueElem scale(const ResidueElem& c, const Integer& n) { return c * ResidueElem(Rational(n)); }
  static void check(const ResidueContext&, const ResidueElem&) {}
};

template <class C>
class DiffPolyT {
 public:
  using Traits = CoeffTraits<C>;
  using Context = typename Traits::Context;
  using TermMap = std::map<MultiIndex, C>;

  explicit DiffPolyT(Context ctx = Context(), unsigned order_bound = 0);

  static DiffPolyT constant(const Context& ctx, const C& c);
  /// The variable Y^(k).
  static DiffPolyT variable(const Context& ctx, unsigned k = 0);
  static DiffPolyT monomial(const Context& ctx, const MultiIndex& i, const C& c);

  const Context& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  unsigned order_bound() const noexcept { return order_bound_; }
  /// Minimum precision among coefficients dropped as zero-at-precision.
  const ExtGroupElement& floor() const noexcept { return floor_; }
  /// A copy whose order bound is at least r.
  DiffPolyT with_order_bound(unsigned r) const;

  /// Accumulates c * Y^i.
  void add_term(const MultiIndex& i, const C& c);
  C coefficient(const MultiIndex& i) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  /// Least d with P_d != 0. Throws DomainError for P = 0.
  unsigned mul_at_zero() const;
  /// Order of the support (highest derivative occurring).
  unsigned ord() const;
  /// (ord P, degree in Y^(ord P), deg P). Throws DomainError for P = 0.
  Complexity complexity() const;
  bool is_homogeneous() const;

  DiffPolyT homogeneous_part(unsigned d) const;
  /// P_{<=d}.
  DiffPolyT truncate_deg(unsigned d) const;
  /// P_{>d}.
  DiffPolyT above_deg(unsigned d) const;

  DiffPolyT operator-() const;
  DiffPolyT operator+(const DiffPolyT& o) const;
  DiffPolyT operator-(const DiffPolyT& o) const;
  DiffPolyT operator*(const DiffPolyT& o) const;
  DiffPolyT scaled(const C& c) const;

  /// delta on coefficients plus Y^(j) -> Y^(j+1); the order bound grows by 1.
  DiffPolyT derive_poly() const;
  /// P(y) with y, y', ..., y^(r) substituted.
  C evaluate(const C& y) const;
  /// P(a + Y) by Taylor expansion.
  DiffPolyT add_conjugate(const C& a) const;
  /// P(a Y): Y^(j) -> sum_k binom(j,k) a^(j-k) Y^(k).
  DiffPolyT mul_conjugate(const C& a) const;

  /// Structural equality (context, terms, floor). The order bound is not compared.
  bool operator==(const DiffPolyT& o) const;

  /// Terms in descending multi-index order, e.g. "Y^2 + t*Y + t^3".
  std::string to_string() const;

 private:
  Context ctx_;
  TermMap terms_;
  unsigned order_bound_ = 0;
  ExtGroupElement floor_ = ExtGroupElement::infinity();

  void absorb(const MultiIndex& i, C c);
  void require_ctx(const DiffPolyT& o) const;
};

/// The iterated partial derivative d^|i| / dY^i0 ... d(Y^(s))^is.
template <class C>
DiffPolyT<C> partial(const MultiIndex& i, const DiffPolyT<C>& p);

using DiffPoly = DiffPolyT<Series>;
using ResiduePoly = DiffPolyT<ResidueElem>;

extern template class DiffPolyT<Series>;
extern template class DiffPolyT<ResidueElem>;

/// Minimum coefficient valuation; infinity for P = 0. Throws BelowPrecision
/// when a coefficient (or a dropped coefficient) hides the minimum.
ExtGroupElement v_of(const DiffPoly& p);
/// Like v_of, but a hidden minimum yields the known lower bound.
ExtGroupElement v_lower_bound(const DiffPoly& p);
/// Multiplies every coefficient by t^g.
DiffPoly shift_coefficients(const DiffPoly& p, const GroupElement& g);
/// P(t^g Y).
DiffPoly mul_conjugate_power(const DiffPoly& p, const GroupElement& g);
/// (d^i(P_{x f}))_{x f^-1} for a monomial f = t^g.
DiffPoly partial_mult_conjugated(const MultiIndex& i, const GroupElement& g, const DiffPoly& p);
/// Residue coefficients of the terms of P of valuation exactly `at`
/// (terms of larger valuation are dropped). Throws DomainError when a
/// coefficient has valuation below `at`, BelowPrecision when hidden.
ResiduePoly residue_part(const DiffPoly& p, const GroupElement& at);
/// Lifts residue coefficients to constant series.
DiffPoly lift(const ResiduePoly& p, const Field& field);

}  // namespace adenewton
