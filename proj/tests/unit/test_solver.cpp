#include <gtest/gtest.h>

#include <set>

#include "adenewton/errors.hpp"
#include "suites.hpp"
#include "testkit.hpp"

using namespace adenewton;
using testkit::ade;
using testkit::g;
using testkit::poly;
using testkit::series;

namespace {

const Field H = Field::h_type();
const Field M = Field::monotone();

ResiduePoly rp(std::initializer_list<std::pair<MultiIndex, ResidueElem>> terms) {
  ResiduePoly out;
  for (const auto& [i, c] : terms) out.add_term(make_index(i), c);
  return out;
}

ResidueElem z() { return ResidueElem::z(); }

}  // namespace

TEST(Quasilinear, Examples) {
  EXPECT_TRUE(is_quasilinear(ade("Y^2 + t*Y + t^3 where Y prec t")));
  EXPECT_FALSE(is_quasilinear(ade("Y^2 + t*Y + t^3 where Y preceq 1")));
  EXPECT_TRUE(is_quasilinear(ade("Y - t where Y preceq 1")));
}

TEST(ResidueSolve, Examples) {
  const ResidueSolveReport q = residue_solve(rp({{{2}, 1}, {{1}, 1}}), H, false);
  EXPECT_EQ(q.roots, (std::vector<ResidueElem>{ResidueElem(-1), ResidueElem(0)}));
  EXPECT_TRUE(q.complete);
  const ResidueSolveReport a = residue_solve(rp({{{0, 1}, 1}, {{1}, 1}, {{}, -z()}}), M);
  ASSERT_EQ(a.roots.size(), 1u);
  EXPECT_EQ(a.roots[0], z() - ResidueElem(1));
  const ResidueSolveReport b = residue_solve(rp({{{0, 1}, 1}, {{1}, 1}, {{}, -1}}), M);
  ASSERT_EQ(b.roots.size(), 1u);
  EXPECT_EQ(b.roots[0], ResidueElem(1));
  EXPECT_TRUE(residue_solve(rp({{{2}, 1}, {{}, 1}}), H).roots.empty());
}

TEST(Lifting, MonotoneExactRoot) {
  const SolutionBranch b = lift_quasilinear(ade("Y' + Y - z - t where Y preceq 1", M), g(5));
  EXPECT_EQ(b.status, BranchStatus::ExactRoot);
  EXPECT_EQ(b.y, series("z - 1 + t", M));
  EXPECT_TRUE(poly("Y' + Y - z - t", M).evaluate(b.y).is_exact_zero());
}

TEST(Lifting, MonotoneQuadratic) {
  const ADE eq = ade("Y^2 + 2*z*Y - 2*z*t where Y prec 1", M);
  const SolutionBranch b = lift_quasilinear(eq, g(3));
  EXPECT_EQ(b.status, BranchStatus::SolvedToPrecision);
  EXPECT_EQ(testkit::exact_below(b.y, Rational(3)), series("t - 1/(2*z)*t^2", M));
  const Series y = replay(M, b.trace);
  EXPECT_GE(eq.poly().evaluate(y).valuation(), ExtGroupElement(g(3)));
}

TEST(Lifting, RejectsNonQuasilinear) {
  EXPECT_THROW(lift_quasilinear(ade("Y^2 + t*Y + t^3 where Y preceq 1"), g(4)), DomainError);
}

TEST(Solve, RunningExample) {
  const auto branches = solve(ade("Y^2 + t*Y + t^3 where Y preceq 1"), g(4));
  ASSERT_EQ(branches.size(), 2u);
  EXPECT_EQ(branches[0].y, series("-t + t^2 + t^3 + O(t^4)"));
  EXPECT_EQ(branches[1].y, series("-t^2 - t^3 + O(t^4)"));
  for (const auto& b : branches) EXPECT_EQ(b.status, BranchStatus::SolvedToPrecision);
}

TEST(Solve, MatchesQuadraticFormula) {
  const auto [minus, plus] = testkit::running_example_roots(Rational(8));
  const auto branches = solve(ade("Y^2 + t*Y + t^3 where Y preceq 1"), g(8));
  ASSERT_EQ(branches.size(), 2u);
  EXPECT_EQ(testkit::exact_below(branches[0].y, Rational(8)), testkit::exact_below(minus, Rational(8)));
  EXPECT_EQ(testkit::exact_below(branches[1].y, Rational(8)), testkit::exact_below(plus, Rational(8)));
}

TEST(Solve, ExactSquareRoots) {
  const auto branches = solve(ade("Y^2 - t where Y preceq 1"), g(4));
  ASSERT_EQ(branches.size(), 2u);
  for (const auto& b : branches) EXPECT_EQ(b.status, BranchStatus::ExactRoot);
  EXPECT_EQ(branches[0].y, Series::monomial(H, g(1, 2), ResidueElem(-1)));
  EXPECT_EQ(branches[1].y, Series::monomial(H, g(1, 2)));
}

TEST(Solve, StuckWithoutRationalRoot) {
  const auto branches = solve(ade("Y^2 + 1 where Y preceq 1"), g(4));
  ASSERT_EQ(branches.size(), 1u);
  EXPECT_EQ(branches[0].status, BranchStatus::StuckResidue);
  EXPECT_FALSE(branches[0].reason.empty());
}

TEST(Solve, BranchBoundAndDepth) {
  EXPECT_EQ(solve(ade("Y^2 + t*Y + t^3 where Y preceq 1"), g(4), SolveOptions{1, 32}).size(), 1u);
  const auto deep = solve(ade("Y^2 + t*Y + t^3 where Y preceq 1"), g(40), SolveOptions{16, 2});
  for (const auto& b : deep) EXPECT_EQ(b.status, BranchStatus::DepthExceeded);
}

TEST(Solve, RejectsHigherRank) {
  const Field h2 = Field::h_type(2);
  const ADE eq(DiffPoly::variable(h2) - DiffPoly::constant(h2, Series::monomial(h2, testkit::g2(0, 1))), EConstraint::all());
  EXPECT_THROW(solve(eq, testkit::g2(1, 0)), DimensionMismatch);
}

TEST(Solve, Deterministic) {
  const ADE eq = ade("Y^3 - t*Y' + t^2*Y - t^4");
  const auto a = solve(eq, g(5));
  const auto b = solve(eq, g(5));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].y, b[k].y);
    EXPECT_EQ(a[k].trace, b[k].trace);
  }
}

TEST(BestApprox, Examples) {
  const auto branches = solve(ade("Y^2 + t*Y + t^3 where Y preceq 1"), g(4));
  EXPECT_EQ(&best_approx(branches, series("-t")), &branches[0]);
  EXPECT_EQ(&best_approx(branches, branches[1].y), &branches[1]);
  const std::vector<SolutionBranch> one(branches.begin(), branches.begin() + 1);
  EXPECT_EQ(&best_approx(one, series("5")), &one[0]);
  EXPECT_THROW(best_approx({}, series("1")), DomainError);
}

TEST(DeltaCompanion, Examples) {
  const DeltaCompanion a = delta_companion(poly("Y^2 + t*Y + t^3"), g(1));
  EXPECT_EQ(a.j, make_index({2}));
  EXPECT_EQ(a.i, make_index({1}));
  EXPECT_EQ(a.delta, poly("2*t*Y + t^2"));
  EXPECT_EQ(ddeg(mul_conjugate_power(a.delta, g(1))), 1u);

  const DeltaCompanion b = delta_companion(poly("(Y')^2 + t^4"), g(1));
  EXPECT_EQ(b.j, make_index({0, 2}));
  EXPECT_EQ(b.i, make_index({0, 1}));
  EXPECT_EQ(mul_conjugate_power(b.delta, g(1)), partial(make_index({0, 1}), mul_conjugate_power(poly("(Y')^2 + t^4"), g(1))));
  EXPECT_EQ(ddeg(mul_conjugate_power(b.delta, g(1))), 1u);

  const DiffPoly lin = poly("Y - t");
  const DeltaCompanion c = delta_companion(lin, g(1));
  EXPECT_TRUE(c.i.empty());
  EXPECT_EQ(c.delta, lin);
  EXPECT_THROW(delta_companion(poly("Y^2 + t"), g(2)), DomainError);
}

TEST(VerifySolution, Examples) {
  const DiffPoly p = poly("Y^2 + t*Y + t^3");
  EXPECT_TRUE(verify_solution(p, series("-t + t^2 + t^3"), EConstraint::val_ge(g(0)), g(4)));
  EXPECT_FALSE(verify_solution(poly("Y"), series("t"), EConstraint::val_ge(g(0)), g(2)));
  EXPECT_TRUE(verify_solution(poly("Y^2 - t"), series("t^(1/2)"), EConstraint::val_ge(g(0)), g(1000)));
  EXPECT_FALSE(verify_solution(poly("Y - t^-1"), series("t^-1"), EConstraint::val_ge(g(0)), g(4)));
}

TEST(SolverProperties, BranchSoundness) {
  testkit::Gen gen(61);
  for (int k = 0; k < 200; ++k) {
    const ADE eq(gen.poly(H, 3, 2, true, 0, 3, 3), EConstraint::val_ge(g(0)));
    if (ddeg_of(eq) == 0) continue;
    for (const auto& b : solve(eq, g(4), SolveOptions{8, 10})) {
      if (b.status == BranchStatus::SolvedToPrecision) EXPECT_TRUE(verify_solution(eq.poly(), b.y, eq.constraint(), g(4)));
      if (b.status == BranchStatus::ExactRoot) EXPECT_TRUE(eq.poly().evaluate(b.y).is_exact_zero());
      const Rational known = b.y.is_exact() ? Rational(1000) : b.y.precision().finite().value();
      EXPECT_EQ(testkit::exact_below(b.y, known), testkit::exact_below(replay(H, b.trace), known));
    }
  }
}

TEST(SolverProperties, FirstStepsAreTheApproximateSolutions) {
  testkit::Gen gen(62);
  for (int k = 0; k < 200; ++k) {
    const ADE eq(gen.poly(H, 3, 2, true), EConstraint::all());
    if (ddeg_of(eq) == 0) continue;
    std::set<std::pair<std::string, std::string>> first;
    for (const auto& b : solve(eq, g(10), SolveOptions{1000, 2})) {
      if (!b.trace.empty()) first.emplace(b.trace[0].exponent.to_string(), b.trace[0].root.to_string());
    }
    std::set<std::pair<std::string, std::string>> expected;
    for (const auto& s : enumerate_approx_solutions(eq, 1).solutions) expected.emplace(s.exponent.to_string(), s.root.to_string());
    EXPECT_EQ(first, expected) << eq.to_string();
  }
}

TEST(SolverProperties, ScalingCommutesWithSolving) {
  // products with known exact roots, so that no leaf depends on where the target truncates
  testkit::Gen gen(63);
  auto truncation_free = [](const std::vector<SolutionBranch>& bs) {
    for (const auto& b : bs) {
      if (b.status == BranchStatus::SolvedToPrecision || b.status == BranchStatus::NonQuasilinearUnravelled ||
          b.status == BranchStatus::DepthExceeded) {
        return false;
      }
    }
    return true;
  };
  int compared = 0;
  for (int k = 0; k < 200; ++k) {
    const Series a1 = Series::monomial(H, gen.exponent(0, 3, 2), gen.residue(H));
    const Series a2 = Series::monomial(H, gen.exponent(0, 3, 2), gen.residue(H));
    const DiffPoly p = (testkit::Y(H) - testkit::K(a1)) * (testkit::Y(H) - testkit::K(a2)) * gen.poly(H, 1, 1, true, 0, 2, 2);
    const GroupElement gamma = g(gen.exponent(-2, 2, 2));
    const ADE direct(p, EConstraint::val_ge(gamma));
    const ADE scaled(mul_conjugate_power(p, gamma), EConstraint::val_ge(g(0)));
    if (ddeg_of(direct) == 0) continue;
    const auto a = solve(direct, g(12), SolveOptions{16, 12});
    const auto b = solve(scaled, g(12), SolveOptions{16, 12});
    if (!truncation_free(a) || !truncation_free(b)) continue;
    ++compared;
    ASSERT_EQ(a.size(), b.size()) << p.to_string() << " at " << gamma.to_string();
    for (std::size_t n = 0; n < a.size(); ++n) {
      EXPECT_EQ(a[n].status, b[n].status);
      EXPECT_EQ(a[n].y, b[n].y.shifted(gamma)) << p.to_string() << " at " << gamma.to_string();
    }
  }
  EXPECT_GE(compared, 100);
}

TEST(SolverProperties, SuitesRunClean) {
  const suites::Result growth = suites::lifting_residual_growth(50);
  EXPECT_TRUE(growth.ok(50)) << growth.first_failure << " (" << growth.instances << " instances)";
}
