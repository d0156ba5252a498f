#pragma once

// Solving asymptotic differential equations over the value group Q:
// quasilinear lifting, the branching search and the quasilinear companion.

#include <string>
#include <vector>

#include "adenewton/ade.hpp"

namespace adenewton {

enum class BranchStatus {
  SolvedToPrecision,
  ExactRoot,
  StuckResidue,
  StuckNoStartingMonomial,
  /// ddeg >= 2 at the stop: y approximates a cluster of solutions that agree below the target.
  NonQuasilinearUnravelled,
  DepthExceeded,
};
std::string to_string(BranchStatus s);
bool is_solved(BranchStatus s);

struct TraceStep {
  GroupElement exponent;
  ResidueElem root;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SolutionBranch {
  /// Terms below the first undetermined exponent, with that exponent as precision.
  Series y;
  BranchStatus status = BranchStatus::StuckResidue;
  std::vector<TraceStep> trace;
  /// v(P(y)) of the exact partial sum.
  ExtGroupElement residual_valuation = ExtGroupElement::infinity();
  std::string reason;
};

/// Sum of root·t^exponent over the trace.
Series replay(const Field& f, const std::vector<TraceStep>& trace);
/// Lexicographic over (exponent, root).
bool trace_less(const std::vector<TraceStep>& a, const std::vector<TraceStep>& b);

bool is_quasilinear(const ADE& eq);

/// Throws DomainError unless the equation is quasilinear.
SolutionBranch lift_quasilinear(const ADE& eq, const GroupElement& target, unsigned depth = 32);

struct SolveOptions {
  unsigned branch_bound = 16;
  unsigned depth = 32;
};

/// Leaves of the search tree ordered by trace, at most branch_bound of them.
/// Throws DimensionMismatch for multi-dimensional groups.
std::vector<SolutionBranch> solve(const ADE& eq, const GroupElement& target, const SolveOptions& opts = {});

/// The branch maximizing v(y - f), first on ties. Throws DomainError on an empty list.
const SolutionBranch& best_approx(const std::vector<SolutionBranch>& branches, const Series& f);

struct DeltaCompanion {
  DiffPoly delta;
  MultiIndex i;
  MultiIndex j;
};

/// Throws DomainError when ddeg P_{×t^g} = 0.
DeltaCompanion delta_companion(const DiffPoly& p, const GroupElement& g);

/// y ∈ E and v(P(y)) >= target.
bool verify_solution(const DiffPoly& p, const Series& y, const EConstraint& e, const GroupElement& target);

}  // namespace adenewton
