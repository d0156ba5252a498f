#pragma once

#include <string>
#include <vector>

#include "adenewton/solver.hpp"
#include "json.hpp"

namespace adenewton::cli {

using nlohmann::json;

std::string exponent_text(const GroupElement& g);
std::string exponent_text(const ExtGroupElement& g);

json diagram_json(const NewtonDiagram& d, const std::vector<GroupElement>& starting);
std::string diagram_text(const NewtonDiagram& d, const std::vector<GroupElement>& starting);

json branches_json(const std::vector<SolutionBranch>& branches);
std::string branches_text(const std::vector<SolutionBranch>& branches);

json field_check_json(const Field& f, const FieldCheckReport& small, const FieldCheckReport& asymptotic);
std::string field_check_text(const Field& f, const FieldCheckReport& small, const FieldCheckReport& asymptotic);

json chain_json(const ChainDdeg& c);
std::string chain_text(const ChainDdeg& c);

json approx_json(const ApproxEnumeration& en);
json unravel_json(const UnravelResult& u);

}  // namespace adenewton::cli
