#include <gtest/gtest.h>

#include "adenewton/errors.hpp"
#include "testkit.hpp"

using namespace adenewton;
using testkit::ade;
using testkit::g;
using testkit::poly;
using testkit::series;

namespace {

const Field H = Field::h_type();

ADE running() { return ade("Y^2 + t*Y + t^3 where Y preceq 1"); }

CutChain chain_of(std::initializer_list<const char*> pts) {
  CutChain c;
  for (const char* p : pts) c.points.push_back(series(p));
  return c;
}

}  // namespace

TEST(AdeDegree, Examples) {
  EXPECT_EQ(ddeg_of(running()), 2u);
  EXPECT_EQ(ddeg_of(ade("Y^2 + t*Y + t^3 where Y prec t")), 1u);
  EXPECT_EQ(ddeg_of(ade("Y^2 + t*Y + t^3 where Y prec t^2")), 0u);
  EXPECT_THROW(ADE(DiffPoly(H), EConstraint::all()), DomainError);
}

TEST(AdeRefine, Examples) {
  const ADE r = refine(running(), series("-t"), EConstraint::val_gt(g(1)));
  EXPECT_EQ(r.poly(), poly("Y^2 - t*Y + t^3"));
  EXPECT_EQ(r.constraint(), EConstraint::val_gt(g(1)));
  const ADE same = refine(running(), Series(H), running().constraint());
  EXPECT_EQ(same.poly(), running().poly());
  EXPECT_THROW(refine(running(), series("t^-1"), EConstraint::val_gt(g(1))), DomainError);
  EXPECT_THROW(refine(running(), series("-t"), EConstraint::val_gt(g(-1))), DomainError);
}

TEST(AdeApprox, Examples) {
  const ApproxCheck a = is_approx_solution(running(), series("-t"));
  EXPECT_TRUE(a.is_approx);
  EXPECT_EQ(a.multiplicity, 1u);
  const ApproxCheck b = is_approx_solution(running(), series("-t^2"));
  EXPECT_TRUE(b.is_approx);
  EXPECT_EQ(b.multiplicity, 1u);
  const ApproxCheck c = is_approx_solution(running(), series("t"));
  EXPECT_FALSE(c.is_approx);
  EXPECT_EQ(c.multiplicity, 0u);
  EXPECT_THROW(is_approx_solution(running(), Series(H)), DomainError);
}

TEST(AdeApprox, Enumeration) {
  const ApproxEnumeration e = enumerate_approx_solutions(running(), 1);
  ASSERT_EQ(e.solutions.size(), 2u);
  EXPECT_EQ(e.solutions[0].exponent, g(1));
  EXPECT_EQ(e.solutions[0].root, ResidueElem(-1));
  EXPECT_EQ(e.solutions[0].multiplicity, 1u);
  EXPECT_EQ(e.solutions[1].exponent, g(2));
  EXPECT_EQ(e.solutions[1].root, ResidueElem(-1));
  EXPECT_EQ(e.solutions[1].multiplicity, 1u);
  EXPECT_TRUE(e.unsolved.empty());

  const ApproxEnumeration s = enumerate_approx_solutions(ade("Y^2 - t where Y preceq 1"), 1);
  ASSERT_EQ(s.solutions.size(), 2u);
  EXPECT_EQ(s.solutions[0].exponent, g(1, 2));
  EXPECT_EQ(s.solutions[1].exponent, g(1, 2));
  EXPECT_EQ(s.solutions[0].root, ResidueElem(-1));
  EXPECT_EQ(s.solutions[1].root, ResidueElem(1));

  EXPECT_TRUE(enumerate_approx_solutions(ade("Y^2 + t*Y*Y'"), 1).solutions.empty());
}

TEST(AdeApprox, EnumeratedValuesAreApproximateSolutions) {
  testkit::Gen gen(51);
  for (int k = 0; k < 200; ++k) {
    const ADE eq(gen.poly(H, 4, 2, true), EConstraint::all());
    for (const auto& s : enumerate_approx_solutions(eq, 1).solutions) {
      const ApproxCheck c = is_approx_solution(eq, s.value(H));
      EXPECT_TRUE(c.is_approx) << eq.to_string();
      EXPECT_EQ(c.multiplicity, s.multiplicity) << eq.to_string();
    }
  }
}

TEST(AdeUnravelled, Examples) {
  EXPECT_TRUE(is_unravelled(running()).value);
  // ddeg on Y ≼ 1 is deg D(Y^2 - t) = 2, and ±t^(1/2) are simple
  EXPECT_EQ(ddeg_of(ade("Y^2 - t where Y preceq 1")), 2u);
  EXPECT_TRUE(is_unravelled(ade("Y^2 - t where Y preceq 1")).value);
  // the strict set gives the same degree 2
  EXPECT_EQ(ddeg_of(ade("Y^2 - t where Y prec 1")), 2u);
  EXPECT_TRUE(is_unravelled(ade("Y^2 - t where Y prec 1")).value);
  // no starting monomial below t^2
  const ADE none = ade("Y^2 + t*Y where Y prec t^2");
  EXPECT_EQ(ddeg_of(none), 1u);
  EXPECT_TRUE(is_unravelled(none).value);
  EXPECT_FALSE(is_unravelled(ade("Y^2 - 2*t*Y + t^2 - t^3 where Y preceq 1")).value);
  EXPECT_THROW(is_unravelled(ade("Y^2 + t*Y + t^3 where Y prec t^2")), DomainError);
}

TEST(AdeUnravel, Examples) {
  const ADE eq = ade("Y^2 - 2*t*Y + (t^2 - t^3) where Y preceq 1");
  const UnravelResult u = unravel(eq, 8);
  EXPECT_EQ(u.status, UnravelStatus::Unravelled);
  EXPECT_EQ(u.f, series("t"));
  EXPECT_EQ(u.constraint, EConstraint::val_gt(g(1)));
  EXPECT_EQ(u.steps, 1u);
  const ADE refined = refine(eq, u.f, u.constraint);
  EXPECT_EQ(refined.poly(), poly("Y^2 - t^3"));
  EXPECT_EQ(ddeg_of(refined), 2u);
  EXPECT_TRUE(is_unravelled(refined).value);

  const UnravelResult done = unravel(running(), 8);
  EXPECT_EQ(done.status, UnravelStatus::Unravelled);
  EXPECT_EQ(done.steps, 0u);
  EXPECT_TRUE(done.f.is_exact_zero());

  EXPECT_EQ(unravel(eq, 0).status, UnravelStatus::DepthExceeded);
}

TEST(AdeUnravel, ExactMultiplicity) {
  // (Y - t)^2 has the exact root t of multiplicity 2
  const UnravelResult u = unravel(ade("Y^2 - 2*t*Y + t^2 where Y preceq 1"), 8);
  EXPECT_EQ(u.status, UnravelStatus::ExactMultiplicityHit);
  EXPECT_EQ(u.f, series("t"));
}

TEST(AdeShift, Examples) {
  const ADE s = shift_multiplicative(series("t"), running());
  EXPECT_EQ(s.poly(), poly("t^-2*Y^2 + Y + t^3"));
  EXPECT_EQ(s.constraint(), EConstraint::val_ge(g(1)));
  EXPECT_EQ(ddeg_of(s), ddeg_of(running()));
  const ADE id = shift_multiplicative(series("1"), running());
  EXPECT_EQ(id.poly(), running().poly());
  EXPECT_EQ(id.constraint(), running().constraint());
  EXPECT_THROW(shift_multiplicative(series("1 + t"), running()), DomainError);
  EXPECT_NO_THROW(shift_multiplicative(series("1 + t"), running(), g(6)));
  EXPECT_THROW(shift_multiplicative(Series(H), running()), DomainError);
}

TEST(AdeShift, PreservesDominantDegree) {
  testkit::Gen gen(52);
  for (int k = 0; k < 200; ++k) {
    const ADE eq(gen.poly(H, 4, 2), EConstraint::val_ge(g(gen.exponent(-2, 2, 3))));
    const Series a = Series::monomial(H, gen.exponent(-2, 2, 3), gen.residue(H));
    EXPECT_EQ(ddeg_of(shift_multiplicative(a, eq)), ddeg_of(eq)) << eq.to_string();
  }
}

TEST(AdeVanishing, Examples) {
  const CutChain toward = chain_of({"0", "-t", "-t + t^2", "-t + t^2 + t^3"});
  const auto r = vanishes_along(running().poly(), toward, {Witness{series("-t"), series("t")}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].verdict, VanishVerdict::Vanishes);
  EXPECT_EQ(r[0].ddeg, 1u);

  const CutChain near = chain_of({"0", "-t", "-t + t^2"});
  const auto y = vanishes_along(poly("Y"), near, {Witness{series("0"), series("1")}, Witness{series("-t"), series("t")}});
  EXPECT_EQ(y[0].verdict, VanishVerdict::Vanishes);
  EXPECT_EQ(y[1].verdict, VanishVerdict::NotVanishing);
  EXPECT_EQ(y[1].ddeg, 0u);

  const auto one = vanishes_along(poly("1"), near, {Witness{series("0"), series("1")}, Witness{series("-t"), series("t")}});
  for (const auto& w : one) EXPECT_EQ(w.verdict, VanishVerdict::NotVanishing);

  const auto far = vanishes_along(poly("Y"), near, {Witness{series("0"), series("t^3")}});
  EXPECT_EQ(far[0].verdict, VanishVerdict::Uncertifiable);
  EXPECT_THROW(vanishes_along(poly("Y"), CutChain{}, {}), DomainError);
}

TEST(AdeProperties, RefinementDoesNotRaiseDegree) {
  testkit::Gen gen(53);
  for (int k = 0; k < 200; ++k) {
    const Rational gamma = gen.exponent(-1, 2, 3);
    const ADE eq(gen.poly(H, 4, 2), EConstraint::val_ge(g(gamma)));
    const Rational vf = gamma + gen.exponent(0, 2, 3);
    const Series f = gen.series_with_valuation(H, vf);
    const ADE r = refine(eq, f, EConstraint::val_gt(g(vf)));
    EXPECT_LE(ddeg_of(r), ddeg_of(eq)) << eq.to_string() << " by " << f.to_string();
  }
}

TEST(AdeProperties, FullDegreeRefinementGivesApproximateSolution) {
  testkit::Gen gen(54);
  int seen = 0;
  for (int k = 0; k < 2000 && seen < 200; ++k) {
    const ADE eq(gen.poly(H, 4, 2, true), EConstraint::all());
    const unsigned d = ddeg_of(eq);
    const auto ms = algebraic_starting_monomials(eq.poly(), eq.constraint());
    if (ms.empty() || d == 0) continue;
    const GroupElement m = ms[static_cast<std::size_t>(gen.integer(0, static_cast<long>(ms.size()) - 1))];
    const Series f = Series::monomial(H, m, gen.residue(H));
    if (ddeg_on(eq.poly().add_conjugate(f), EConstraint::val_gt(m)) < 1) continue;
    ++seen;
    EXPECT_TRUE(is_approx_solution(eq, f).is_approx) << eq.to_string() << " at " << f.to_string();
  }
  EXPECT_GE(seen, 50);
}

TEST(AdeProperties, SolutionsOfRefinementsSolveTheEquation) {
  const ADE eq = running();
  const GroupElement target = g(6);
  const ADE r = refine(eq, series("-t"), EConstraint::val_gt(g(1)));
  for (const auto& b : solve(r, target)) {
    if (!is_solved(b.status)) continue;
    const Series y = series("-t") + b.y;
    EXPECT_TRUE(verify_solution(eq.poly(), y, eq.constraint(), target)) << y.to_string();
  }
}

TEST(AdeProperties, SolutionsForceDominantDegree) {
  // P = (Y - a) Q has the exact root a; every exact root y found forces ddeg P_{×g} >= 1 for y ≼ g
  testkit::Gen gen(55);
  int seen = 0;
  for (int k = 0; k < 200; ++k) {
    const Series a = Series::monomial(H, gen.exponent(0, 2, 2), gen.residue(H));
    const DiffPoly p = (testkit::Y(H) - testkit::K(a)) * gen.poly(H, 2, 1, true, 0, 3, 2);
    const ADE eq(p, EConstraint::all());
    for (const auto& b : solve(eq, g(5), SolveOptions{8, 12})) {
      if (b.status != BranchStatus::ExactRoot) continue;
      const GroupElement vy = b.y.valuation().finite();
      for (long s = 0; s <= 3; ++s) {
        EXPECT_GE(ddeg_at(p, vy - g(s, 2)), 1u) << eq.to_string() << " at " << b.y.to_string();
        ++seen;
      }
    }
  }
  EXPECT_GE(seen, 200);
}
