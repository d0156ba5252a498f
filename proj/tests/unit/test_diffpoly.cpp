#include <gtest/gtest.h>

#include "adenewton/errors.hpp"
#include "testkit.hpp"

using namespace adenewton;
using testkit::g;
using testkit::poly;
using testkit::series;

namespace {

const Field H = Field::h_type();
const Field M = Field::monotone();

Series monomial_of(const Series& f) { return Series::monomial(f.field(), f.valuation().finite()); }

}  // namespace

TEST(DiffPolyBasics, Complexity) {
  EXPECT_EQ(poly("Y*Y'' + (Y')^3").complexity(), (Complexity{2, 1, 3}));
  EXPECT_EQ(poly("Y''*Y - (Y')^2").complexity(), (Complexity{2, 1, 2}));
  const DiffPoly p = poly("Y^2 + t*Y + t^3");
  EXPECT_EQ(p.mul_at_zero(), 0u);
  EXPECT_EQ(p.truncate_deg(1), poly("t*Y + t^3"));
  EXPECT_EQ(p.above_deg(1), poly("Y^2"));
  EXPECT_EQ(p.homogeneous_part(1), poly("t*Y"));
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_THROW((void)DiffPoly(H).mul_at_zero(), DomainError);
}

TEST(DiffPolyValuation, Examples) {
  EXPECT_EQ(v_of(poly("Y^2 + t*Y + t^3")), ExtGroupElement(g(0)));
  EXPECT_EQ(v_of(poly("t^2*Y' + t^3")), ExtGroupElement(g(2)));
  EXPECT_TRUE(v_of(DiffPoly(H)).is_infinite());
}

TEST(DiffPolyConjugation, Additive) {
  EXPECT_EQ(poly("Y^2 + t*Y + t^3").add_conjugate(series("-t")), poly("Y^2 - t*Y + t^3"));
  EXPECT_EQ(poly("Y'").add_conjugate(series("t")), poly("Y' - t^2"));
}

TEST(DiffPolyConjugation, Multiplicative) {
  EXPECT_EQ(poly("Y'").mul_conjugate(series("t")), poly("t*Y' - t^2*Y"));
  EXPECT_EQ(poly("Y^2").mul_conjugate(series("t^(1/2)")), poly("t*Y^2"));
  EXPECT_EQ(mul_conjugate_power(poly("Y^2"), g(1, 2)), poly("t*Y^2"));
}

TEST(DiffPolyEvaluate, Examples) {
  EXPECT_EQ(poly("Y^2 + t*Y + t^3").evaluate(Series(H)), series("t^3"));
  EXPECT_TRUE(poly("Y' + Y^2").evaluate(series("t")).is_exact_zero());
  EXPECT_TRUE(poly("Y' + Y - z - t", M).evaluate(series("z - 1 + t", M)).is_exact_zero());
}

TEST(DiffPolyPartial, Examples) {
  EXPECT_EQ(partial(make_index({1}), poly("Y^2 + t*Y + t^3")), poly("2*Y + t"));
  EXPECT_EQ(partial(make_index({0, 1}), poly("Y*Y'")), poly("Y"));
  EXPECT_EQ(partial(make_index({1, 1}), poly("(Y')^2*Y")), poly("2*Y'"));
}

TEST(DiffPolyPartial, MultConjugated) {
  const DiffPoly p = poly("Y^2 + t*Y + t^3");
  EXPECT_EQ(partial_mult_conjugated(make_index({1}), g(1), p), poly("2*t*Y + t^2"));
  EXPECT_EQ(partial_mult_conjugated(make_index({1}), g(0), p), partial(make_index({1}), p));
  EXPECT_EQ(partial_mult_conjugated(make_index({}), g(1), p), p);
}

TEST(DiffPolyDerive, Examples) {
  EXPECT_EQ(poly("Y").derive_poly(), poly("Y'"));
  EXPECT_EQ(poly("t*Y").derive_poly(), poly("t*Y' - t^2*Y"));
  EXPECT_EQ(poly("z*Y^2", M).derive_poly(), poly("Y^2 + 2*z*Y*Y'", M));
}

TEST(DiffPolyProperties, TaylorConsistency) {
  for (const Field& f : {H, M}) {
    testkit::Gen gen(31);
    for (int k = 0; k < 200; ++k) {
      const DiffPoly p = gen.poly(f, 3, 2);
      const Series a = gen.series(f, -1, 3, 2);
      const Series y = gen.series(f, -1, 3, 2);
      EXPECT_EQ(p.add_conjugate(a).evaluate(y), p.evaluate(a + y));
    }
  }
}

TEST(DiffPolyProperties, Composition) {
  testkit::Gen gen(32);
  for (int k = 0; k < 200; ++k) {
    const Field& f = k % 2 ? M : H;
    const DiffPoly p = gen.poly(f, 3, 2);
    const Series a = gen.series(f, -1, 3, 2);
    const Series b = gen.series(f, -1, 3, 2);
    EXPECT_EQ(p.add_conjugate(a).add_conjugate(b), p.add_conjugate(a + b));
    EXPECT_EQ(p.mul_conjugate(a).mul_conjugate(b), p.mul_conjugate(a * b));
  }
}

TEST(DiffPolyProperties, SmallAdditiveShiftKeepsValuation) {
  testkit::Gen gen(33);
  for (int k = 0; k < 300; ++k) {
    const Field& f = k % 2 ? M : H;
    const DiffPoly p = gen.poly(f, 3, 2);
    const Series fa = gen.series_with_valuation(f, gen.exponent(0, 3, 3));
    const DiffPoly shifted = p.add_conjugate(fa);
    EXPECT_EQ(v_of(shifted), v_of(p));
    if (fa.valuation() > ExtGroupElement(g(0))) {
      const DiffPoly diff = shifted - p;
      EXPECT_TRUE(diff.is_zero() || v_of(diff) > v_of(p));
    }
  }
}

TEST(DiffPolyProperties, MultiplicativeValuationDependsOnlyOnValuation) {
  testkit::Gen gen(34);
  for (int k = 0; k < 300; ++k) {
    const Field& f = k % 2 ? M : H;
    const DiffPoly p = gen.poly(f, 3, 2);
    const Series a = gen.series_with_valuation(f, gen.exponent(-2, 3, 3));
    EXPECT_EQ(v_of(p.mul_conjugate(a)), v_of(p.mul_conjugate(monomial_of(a))));
  }
}

TEST(DiffPolyProperties, HomogeneousPartsCommuteWithConjugation) {
  testkit::Gen gen(35);
  for (int k = 0; k < 200; ++k) {
    const Field& f = k % 2 ? M : H;
    const DiffPoly p = gen.poly(f, 4, 2);
    const Series a = gen.series(f, -2, 3, 2);
    for (unsigned d = 0; d <= p.degree(); ++d) EXPECT_EQ(p.homogeneous_part(d).mul_conjugate(a), p.mul_conjugate(a).homogeneous_part(d));
  }
}

TEST(DiffPolyProperties, MonomialConjugationExactShiftOverQ) {
  // over Q the h-type derivation only adds terms of higher valuation
  testkit::Gen gen(36);
  for (int k = 0; k < 300; ++k) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 4));
    const DiffPoly p = gen.homogeneous(H, d, 2);
    const Rational gamma = gen.exponent(-3, 3, 6);
    const Rational expected = v_of(p).finite().value() + Rational(d) * gamma;
    EXPECT_EQ(v_of(mul_conjugate_power(p, g(gamma))).finite().value(), expected);
  }
}

TEST(DiffPolyProperties, MonomialConjugationWithinCoarseningOnQ2) {
  const Field H2 = Field::h_type(2);
  testkit::Gen gen(37);
  for (int k = 0; k < 200; ++k) {
    const unsigned d = static_cast<unsigned>(gen.integer(1, 3));
    DiffPoly p(H2, 2);
    for (int n = 0; n < 2; ++n) {
      p.add_term(gen.index(d, 2), Series::monomial(H2, testkit::g2(gen.rational(2, 2), gen.rational(3, 2)), gen.residue(H2)));
    }
    if (p.is_zero()) continue;
    const GroupElement gamma = testkit::g2(gen.coin() ? Rational(0) : gen.nonzero_rational(2, 2), gen.nonzero_rational(3, 2));
    const GroupElement lhs = v_of(mul_conjugate_power(p, gamma)).finite();
    const GroupElement rhs = v_of(p).finite() + gamma * Rational(d);
    EXPECT_TRUE(in_gamma_phi(lhs - rhs, gamma));
  }
}
