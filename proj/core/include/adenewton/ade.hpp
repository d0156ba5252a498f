#pragma once

// Asymptotic differential equations P(Y) = 0, Y ∈ E: refinement,
// approximate solutions, unravelling and the vanishing test along cuts.

#include <optional>
#include <string>
#include <vector>

#include "adenewton/diffpoly.hpp"
#include "adenewton/dominant.hpp"
#include "adenewton/newton.hpp"
#include "adenewton/residue_solve.hpp"

namespace adenewton {

class ADE {
 public:
  /// Throws DomainError for P = 0.
  ADE(DiffPoly p, EConstraint e);

  const DiffPoly& poly() const noexcept { return p_; }
  const EConstraint& constraint() const noexcept { return e_; }
  const Field& field() const noexcept { return p_.context(); }

  std::string to_string() const;

 private:
  DiffPoly p_;
  EConstraint e_;
};

/// ddeg_E P.
unsigned ddeg_of(const ADE& eq);

/// (P_{+f}, E'). Throws DomainError unless E' ⊆ E and f ∈ E ∪ {0}.
ADE refine(const ADE& eq, const Series& f, const EConstraint& e2);

struct ApproxCheck {
  bool is_approx = false;
  unsigned multiplicity = 0;
};

/// ddeg_{≺y} P_{+y} >= 1. Throws DomainError for y = 0 or y ∉ E.
ApproxCheck is_approx_solution(const ADE& eq, const Series& y);

struct ApproxSolution {
  GroupElement exponent;
  ResidueElem root;
  unsigned multiplicity = 0;

  Series value(const Field& f) const { return Series::monomial(f, exponent, root); }
};

/// A starting monomial whose residue equation left roots undetermined.
struct UnsolvedMonomial {
  GroupElement exponent;
  unsigned residue_degree = 0;
  std::string reason;
};

struct ApproxEnumeration {
  /// Ordered by increasing exponent, then by root.
  std::vector<ApproxSolution> solutions;
  std::vector<UnsolvedMonomial> unsolved;
};

/// Approximate solutions c·t^m with m an algebraic starting monomial in E and
/// multiplicity at least min_multiplicity.
ApproxEnumeration enumerate_approx_solutions(const ADE& eq, unsigned min_multiplicity);

struct UnravelledCheck {
  bool value = false;
  std::vector<std::string> warnings;
  explicit operator bool() const noexcept { return value; }
};

/// No approximate solution of multiplicity ddeg_E P. Conservatively false when
/// a residue equation of degree >= d could not be solved completely.
/// Throws DomainError when ddeg_E P = 0.
UnravelledCheck is_unravelled(const ADE& eq);

enum class UnravelStatus { Unravelled, DepthExceeded, ResidueUnsolvable, ExactMultiplicityHit };
std::string to_string(UnravelStatus s);

struct UnravelResult {
  Series f;
  EConstraint constraint;
  UnravelStatus status;
  unsigned steps = 0;
  std::vector<std::string> warnings;
};

/// Refines by full-multiplicity approximate solutions until unravelled.
/// Throws DomainError when ddeg_E P = 0.
UnravelResult unravel(const ADE& eq, unsigned depth);

/// (P_{×a^-1}, aE). A non-monomial a is inverted up to `inverse_precision`.
ADE shift_multiplicative(const Series& a, const ADE& eq, std::optional<GroupElement> inverse_precision = std::nullopt);

struct Witness {
  Series a;
  Series v;
};

enum class VanishVerdict { Vanishes, NotVanishing, Uncertifiable };
std::string to_string(VanishVerdict v);

struct WitnessResult {
  VanishVerdict verdict = VanishVerdict::Uncertifiable;
  /// ddeg_{≺v} P_{+a}, when certified.
  std::optional<unsigned> ddeg;
  std::string reason;
};

/// For each witness (a, v) with a - ℓ ≺ v certified against the chain's
/// limit ℓ, reports whether ddeg_{≺v} P_{+a} >= 1.
std::vector<WitnessResult> vanishes_along(const DiffPoly& p, const CutChain& chain, const std::vector<Witness>& witnesses);

}  // namespace adenewton
