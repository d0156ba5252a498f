#include "adenewton/solver.hpp"

#include <algorithm>
#include <optional>

#include "adenewton/errors.hpp"

namespace adenewton {

std::string to_string(BranchStatus s) {
  switch (s) {
    case BranchStatus::SolvedToPrecision: return "SolvedToPrecision";
    case BranchStatus::ExactRoot: return "ExactRoot";
    case BranchStatus::StuckResidue: return "StuckResidue";
    case BranchStatus::StuckNoStartingMonomial: return "StuckNoStartingMonomial";
    case BranchStatus::NonQuasilinearUnravelled: return "NonQuasilinearUnravelled";
    case BranchStatus::DepthExceeded: return "DepthExceeded";
  }
  return "?";
}

bool is_solved(BranchStatus s) {
  return s == BranchStatus::SolvedToPrecision || s == BranchStatus::ExactRoot ||
         s == BranchStatus::NonQuasilinearUnravelled;
}

Series replay(const Field& f, const std::vector<TraceStep>& trace) {
  Series y(f);
  for (const auto& s : trace) y = y + Series::monomial(f, s.exponent, s.root);
  return y;
}

bool trace_less(const std::vector<TraceStep>& a, const std::vector<TraceStep>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const TraceStep& x, const TraceStep& y) {
    if (x.exponent != y.exponent) return x.exponent < y.exponent;
    return x.root < y.root;
  });
}

bool is_quasilinear(const ADE& eq) { return ddeg_of(eq) == 1; }

namespace {

struct Node {
  Series y;  // exact partial sum
  ADE eq;    // (P_{+y}, E_y)
  std::vector<TraceStep> trace;
};

struct Expansion {
  std::optional<SolutionBranch> leaf;
  std::vector<Node> children;
};

Expansion expand(const DiffPoly& p, const Node& node, const GroupElement& target, bool depth_exhausted) {
  Expansion out;
  const Series residual = p.evaluate(node.y);
  SolutionBranch leaf;
  leaf.y = node.y;
  leaf.trace = node.trace;
  leaf.residual_valuation = residual.is_exact_zero() ? ExtGroupElement::infinity() : residual.valuation_lower_bound();
  auto finish = [&](BranchStatus s, std::string reason) {
    leaf.status = s;
    leaf.reason = std::move(reason);
    out.leaf = leaf;
    return out;
  };

  if (residual.is_exact_zero()) return finish(BranchStatus::ExactRoot, "");
  const ADE& eq = node.eq;
  const unsigned d = ddeg_of(eq);
  if (d == 0) return finish(BranchStatus::StuckNoStartingMonomial, "dominant degree 0 on " + eq.constraint().to_string());

  std::vector<GroupElement> monomials = algebraic_starting_monomials(eq.poly(), eq.constraint());
  std::sort(monomials.begin(), monomials.end());
  const bool residual_small = leaf.residual_valuation >= ExtGroupElement(target);
  if (residual_small && (monomials.empty() || monomials.front() >= target)) {
    if (!monomials.empty()) leaf.y = node.y.truncated(monomials.front());
    return finish(d == 1 ? BranchStatus::SolvedToPrecision : BranchStatus::NonQuasilinearUnravelled,
                  d == 1 ? "" : "dominant degree " + std::to_string(d) + " at the target");
  }
  if (depth_exhausted) return finish(BranchStatus::DepthExceeded, "search depth exhausted");
  if (monomials.empty()) {
    return finish(BranchStatus::StuckNoStartingMonomial, "no algebraic starting monomial in " + eq.constraint().to_string());
  }

  std::vector<std::string> stuck;
  for (const auto& m : monomials) {
    const ResiduePoly dp = dominant_part(mul_conjugate_power(eq.poly(), m));
    const ResidueSolveReport report = residue_solve(dp, eq.field());
    const std::string where = "at " + (m.is_zero() ? std::string("1") : render_power(m));
    if (report.derivative_dominant) {
      stuck.push_back(report.reason + " " + where);
      continue;
    }
    if (report.roots.empty()) {
      stuck.push_back("no root of " + dp.to_string() + " " + where + (report.reason.empty() ? "" : " (" + report.reason + ")"));
      continue;
    }
    for (const auto& r : report.roots) {
      const Series term = Series::monomial(eq.field(), m, r);
      std::vector<TraceStep> trace = node.trace;
      trace.push_back(TraceStep{m, r});
      out.children.push_back(Node{node.y + term, refine(eq, term, EConstraint::val_gt(m)), std::move(trace)});
    }
  }
  if (!stuck.empty()) {
    std::string reason;
    for (const auto& s : stuck) reason += (reason.empty() ? "" : "; ") + s;
    leaf.status = BranchStatus::StuckResidue;
    leaf.reason = reason;
    out.leaf = leaf;
  }
  return out;
}

void require_rank_one(const Field& f) {
  if (f.dim() != 1) throw DimensionMismatch("the solver needs the value group Q; got dimension " + std::to_string(f.dim()));
}

}  // namespace

SolutionBranch lift_quasilinear(const ADE& eq, const GroupElement& target, unsigned depth) {
  require_rank_one(eq.field());
  if (!is_quasilinear(eq)) throw DomainError("lifting needs a quasilinear equation; ddeg is " + std::to_string(ddeg_of(eq)));
  Node node{Series(eq.field()), eq, {}};
  while (true) {
    Expansion ex = expand(eq.poly(), node, target, node.trace.size() >= depth);
    if (ex.leaf && ex.children.empty()) return *ex.leaf;
    if (ex.leaf || ex.children.size() != 1) throw Error("quasilinear lifting branched at step " + std::to_string(node.trace.size()));
    const ExtGroupElement rv = v_lower_bound(ex.children.front().eq.poly().homogeneous_part(0));
    const ExtGroupElement before = v_lower_bound(node.eq.poly().homogeneous_part(0));
    if (!(rv > before)) throw Error("residual valuation did not increase at step " + std::to_string(node.trace.size() + 1));
    node = std::move(ex.children.front());
  }
}

std::vector<SolutionBranch> solve(const ADE& eq, const GroupElement& target, const SolveOptions& opts) {
  require_rank_one(eq.field());
  std::vector<SolutionBranch> leaves;
  std::vector<Node> stack{Node{Series(eq.field()), eq, {}}};
  // depth-first, children in (exponent, root) order, so leaves come out sorted by trace
  while (!stack.empty() && leaves.size() < opts.branch_bound) {
    Node node = std::move(stack.back());
    stack.pop_back();
    Expansion ex = expand(eq.poly(), node, target, node.trace.size() >= opts.depth);
    if (ex.leaf) {
      SolutionBranch& b = *ex.leaf;
      if ((b.status == BranchStatus::SolvedToPrecision || b.status == BranchStatus::ExactRoot ||
           b.status == BranchStatus::NonQuasilinearUnravelled) &&
          !verify_solution(eq.poly(), b.y, eq.constraint(), target)) {
        throw Error("branch " + b.y.to_string() + " fails verification");
      }
      leaves.push_back(std::move(b));
    }
    for (auto it = ex.children.rbegin(); it != ex.children.rend(); ++it) stack.push_back(std::move(*it));
  }
  if (leaves.size() > opts.branch_bound) leaves.resize(opts.branch_bound);
  return leaves;
}

const SolutionBranch& best_approx(const std::vector<SolutionBranch>& branches, const Series& f) {
  if (branches.empty()) throw DomainError("best approximation over an empty list of branches");
  const SolutionBranch* best = nullptr;
  ExtGroupElement best_v = ExtGroupElement::infinity();
  for (const auto& b : branches) {
    const Series diff = b.y - f;
    const ExtGroupElement v = diff.is_exact_zero() ? ExtGroupElement::infinity() : diff.valuation_lower_bound();
    if (!best || v > best_v) {
      best = &b;
      best_v = v;
    }
  }
  return *best;
}

DeltaCompanion delta_companion(const DiffPoly& p, const GroupElement& g) {
  const DiffPoly pf = mul_conjugate_power(p, g);
  const ResiduePoly dom = dominant_part(pf);
  const unsigned d = dom.degree();
  if (d == 0) throw DomainError("quasilinear companion needs ddeg P_{×t^g} >= 1");
  std::optional<MultiIndex> j;
  for (const auto& [idx, c] : dom.terms()) {
    if (index_degree(idx) != d || c.is_zero()) continue;
    if (!j || idx < *j) j = idx;
  }
  MultiIndex i = *j;
  for (std::size_t k = i.size(); k-- > 0;) {
    if (i[k] != 0) {
      --i[k];
      break;
    }
  }
  i = make_index(std::move(i));
  DiffPoly delta = i.empty() ? p : partial_mult_conjugated(i, g, p);
  if (ddeg(mul_conjugate_power(delta, g)) != 1) throw Error("quasilinear companion is not quasilinear at " + render_power(g));
  return DeltaCompanion{std::move(delta), std::move(i), std::move(*j)};
}

bool verify_solution(const DiffPoly& p, const Series& y, const EConstraint& e, const GroupElement& target) {
  if (y.is_exact_zero()) return false;
  const std::optional<ExtGroupElement> vy = y.known_valuation();
  if (!vy || vy->is_infinite() || !e.contains(vy->finite())) return false;
  const Series r = p.evaluate(y);
  return r.is_exact_zero() || r.valuation_lower_bound() >= ExtGroupElement(target);
}

}  // namespace adenewton
