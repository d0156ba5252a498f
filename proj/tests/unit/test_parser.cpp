#include <gtest/gtest.h>

#include "adenewton/errors.hpp"
#include "testkit.hpp"

using namespace adenewton;
using namespace adenewton::cli;
using testkit::g;

namespace {

const Field H = Field::h_type();
const Field M = Field::monotone();

DiffPoly build(const Field& f, std::initializer_list<std::pair<MultiIndex, Series>> terms) {
  DiffPoly p(f, 2);
  for (const auto& [i, c] : terms) p.add_term(make_index(i), c);
  return p;
}

}  // namespace

TEST(ParsePoly, RunningExample) {
  const DiffPoly p = parse_poly("Y^2 + t*Y + t^3", H);
  EXPECT_EQ(p, build(H, {{{2}, Series::constant(H, 1)}, {{1}, Series::monomial(H, Rational(1))}, {{}, Series::monomial(H, Rational(3))}}));
  EXPECT_EQ(p.to_string(), "Y^2 + t*Y + t^3");
}

TEST(ParsePoly, MonotoneLiftingExample) {
  const DiffPoly p = parse_poly("Y' + Y - z - t", M);
  const Series c = -(Series::constant(M, ResidueElem::z()) + Series::monomial(M, Rational(1)));
  EXPECT_EQ(p, build(M, {{{0, 1}, Series::constant(M, 1)}, {{1}, Series::constant(M, 1)}, {{}, c}}));
}

TEST(ParsePoly, Complexity) { EXPECT_EQ(parse_poly("Y''*Y - (Y')^2", H).complexity(), (Complexity{2, 1, 2})); }

TEST(ParsePoly, Exponents) {
  EXPECT_EQ(parse_series("t^1/2", H), Series::monomial(H, make_rational(Integer(1), Integer(2))));
  EXPECT_EQ(parse_series("t^(-3/4)", H), Series::monomial(H, make_rational(Integer(-3), Integer(4))));
  EXPECT_EQ(parse_series("t^-2", H), Series::monomial(H, Rational(-2)));
  EXPECT_EQ(parse_series("3/t", H), Series::monomial(H, Rational(-1), 3));
  EXPECT_EQ(parse_series("(1 + t)^2", H), parse_series("1 + 2*t + t^2", H));
  EXPECT_EQ(parse_series("t + O(t^3)", H), Series::monomial(H, Rational(1)).truncated(g(3)));
  const Field h2 = Field::h_type(2);
  EXPECT_EQ(parse_series("t^(1,-2)", h2), Series::monomial(h2, testkit::g2(1, -2)));
}

TEST(ParsePoly, Errors) {
  try {
    (void)parse_poly("Y^2 + * t", H);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 7u);
  }
  try {
    (void)parse_poly("Y^2 +\n  t**Y", H);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_poly("z*Y", H), ParseError);
  EXPECT_THROW(parse_poly("Y/Y", H), ParseError);
  EXPECT_THROW(parse_poly("Y''", H, 1), ParseError);
  EXPECT_THROW(parse_series("Y", H), ParseError);
  EXPECT_THROW(parse_poly("(Y", H), ParseError);
}

TEST(ParseConstraint, Forms) {
  EXPECT_EQ(parse_constraint("all", H), EConstraint::all());
  EXPECT_EQ(parse_constraint("Y in K*", H), EConstraint::all());
  EXPECT_EQ(parse_constraint("Y ∈ K^×", H), EConstraint::all());
  EXPECT_EQ(parse_constraint("Y preceq 1", H), EConstraint::val_ge(g(0)));
  EXPECT_EQ(parse_constraint("Y ≼ t^2", H), EConstraint::val_ge(g(2)));
  EXPECT_EQ(parse_constraint("Y prec t", H), EConstraint::val_gt(g(1)));
  EXPECT_EQ(parse_constraint("≺ t^(1/2)", H), EConstraint::val_gt(g(1, 2)));
  EXPECT_EQ(parse_constraint("Y <= t", H), EConstraint::val_ge(g(1)));
  EXPECT_EQ(parse_constraint("Y < t", H), EConstraint::val_gt(g(1)));
  EXPECT_THROW(parse_constraint("Y prec 2*t", H), ParseError);
  EXPECT_THROW(parse_constraint("Y ~ t", H), ParseError);
}

TEST(ParseAde, Forms) {
  const ADE a = parse_ade("Y^2 + t*Y + t^3 = 0 where Y preceq 1", H);
  EXPECT_EQ(a.poly(), parse_poly("Y^2 + t*Y + t^3", H));
  EXPECT_EQ(a.constraint(), EConstraint::val_ge(g(0)));
  const ADE b = parse_ade("P = Y^2 + t*Y + t^3; where Y ≺ t", H);
  EXPECT_EQ(b.constraint(), EConstraint::val_gt(g(1)));
  EXPECT_EQ(parse_ade("Y - t", H).constraint(), EConstraint::all());
  EXPECT_THROW(parse_ade("0 where Y preceq 1", H), DomainError);
}

TEST(ParseExponent, Forms) {
  EXPECT_EQ(parse_exponent("4", 1), g(4));
  EXPECT_EQ(parse_exponent("7/2", 1), g(7, 2));
  EXPECT_EQ(parse_exponent("-1/3", 1), g(-1, 3));
  EXPECT_EQ(parse_exponent("(1,2)", 2), testkit::g2(1, 2));
  EXPECT_THROW(parse_exponent("(1,2)", 1), DimensionMismatch);
  EXPECT_THROW(parse_exponent("x", 1), ParseError);
}

TEST(ParseRoundTrip, RandomPolynomials) {
  testkit::Gen gen(71);
  for (int k = 0; k < 500; ++k) {
    const Field& f = k % 2 ? M : H;
    const DiffPoly p = gen.poly(f, 4, 3, gen.coin(), -3, 4, 6);
    const std::string text = p.to_string();
    EXPECT_EQ(parse_poly(text, f), p) << text;
  }
}

TEST(ParseRoundTrip, RandomSeries) {
  testkit::Gen gen(72);
  for (int k = 0; k < 500; ++k) {
    const Field& f = k % 2 ? M : H;
    Series s = gen.series(f, -3, 4, 4, 6);
    if (gen.coin()) s = s.truncated(g(gen.exponent(-3, 5, 6)));
    EXPECT_EQ(parse_series(s.to_string(), f), s) << s.to_string();
  }
}
