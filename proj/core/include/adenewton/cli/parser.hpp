#pragma once

// Text syntax for series, differential polynomials, constraints and equations.
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := atom ['^' nat]
//   atom   := 'Y' quote* | 't' ['^' exp] | 'z' | int | 'O(' poly ')' | '(' poly ')'
//   exp    := ['-'] int ['/' nat] | '(' rational (',' rational)* ')'
//
// Division is by exact monomials only. `z` exists only in the monotone preset.

#include <optional>
#include <string_view>

#include "adenewton/ade.hpp"

namespace adenewton::cli {

/// Throws ParseError with line and column; `max_order` bounds the derivative order.
DiffPoly parse_poly(std::string_view src, const Field& field, std::optional<unsigned> max_order = std::nullopt);
/// A Y-free expression.
Series parse_series(std::string_view src, const Field& field);
/// "Y in K*", "Y ∈ K^×", "all", "Y ≺ t", "Y preceq 1", ... The leading "Y" may be omitted.
EConstraint parse_constraint(std::string_view src, const Field& field);
/// "<poly> [= 0] [;] where <constraint>", optionally prefixed by "P =". No where-clause means Y ∈ K^×.
ADE parse_ade(std::string_view src, const Field& field, std::optional<unsigned> max_order = std::nullopt);
/// "p/q" for dim 1, "(a,b,...)" in general.
GroupElement parse_exponent(std::string_view src, std::size_t dim);

}  // namespace adenewton::cli
