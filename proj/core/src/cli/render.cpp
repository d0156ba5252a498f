#include "render.hpp"

#include <sstream>

namespace adenewton::cli {

std::string exponent_text(const GroupElement& g) { return g.to_string(); }
std::string exponent_text(const ExtGroupElement& g) { return g.to_string(); }

namespace {

std::string monomial_text(const GroupElement& g) {
  const std::string p = render_power(g);
  return p.empty() ? "1" : p;
}

std::string trace_text(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const auto& s : trace) {
    if (!out.empty()) out += " ";
    out += "(" + exponent_text(s.exponent) + ", " + s.root.to_string() + ")";
  }
  return out.empty() ? "-" : out;
}

}  // namespace

json diagram_json(const NewtonDiagram& d, const std::vector<GroupElement>& starting) {
  json eqs = json::array();
  for (const auto& a : d.equalizers) eqs.push_back(to_string(a));
  json st = json::array();
  for (const auto& g : starting) st.push_back(exponent_text(g));
  return json{{"i_sequence", d.i_sequence}, {"equalizers", eqs}, {"starting_monomials", st}};
}

std::string diagram_text(const NewtonDiagram& d, const std::vector<GroupElement>& starting) {
  std::ostringstream out;
  out << "i_sequence:";
  for (auto i : d.i_sequence) out << " " << i;
  out << "\nequalizers:";
  for (const auto& a : d.equalizers) out << " " << monomial_text(GroupElement::scalar(a));
  out << "\nstarting monomials:";
  if (starting.empty()) out << " none";
  for (const auto& g : starting) out << " " << monomial_text(g);
  out << "\n";
  return out.str();
}

json branches_json(const std::vector<SolutionBranch>& branches) {
  json arr = json::array();
  for (const auto& b : branches) {
    json trace = json::array();
    for (const auto& s : b.trace) trace.push_back(json{{"exponent", exponent_text(s.exponent)}, {"root", s.root.to_string()}});
    json j{{"y", b.y.to_string()},
           {"status", to_string(b.status)},
           {"residual_valuation", exponent_text(b.residual_valuation)},
           {"trace", trace}};
    if (!b.reason.empty()) j["reason"] = b.reason;
    arr.push_back(std::move(j));
  }
  return json{{"branches", arr}};
}

std::string branches_text(const std::vector<SolutionBranch>& branches) {
  std::ostringstream out;
  if (branches.empty()) out << "no branches\n";
  for (std::size_t k = 0; k < branches.size(); ++k) {
    const auto& b = branches[k];
    out << "branch " << k + 1 << ": " << to_string(b.status) << "\n";
    out << "  y = " << b.y.to_string() << "\n";
    out << "  residual valuation: " << exponent_text(b.residual_valuation) << "\n";
    out << "  trace: " << trace_text(b.trace) << "\n";
    if (!b.reason.empty()) out << "  reason: " << b.reason << "\n";
  }
  return out.str();
}

namespace {

json report_json(const FieldCheckReport& r) {
  json j{{"passed", r.passed}, {"samples", r.samples}, {"property", r.property}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

void report_text(std::ostream& out, const std::string& title, const FieldCheckReport& r) {
  out << title << ": " << (r.passed ? "pass" : "fail") << " (" << r.samples << " samples)\n";
  out << "  " << r.property << "\n";
  if (r.counterexample) out << "  counterexample: " << *r.counterexample << "\n";
}

}  // namespace

json field_check_json(const Field& f, const FieldCheckReport& small, const FieldCheckReport& asymptotic) {
  return json{{"preset", f.name()},
              {"dim", f.dim()},
              {"small_derivation", report_json(small)},
              {"asymptotic", report_json(asymptotic)}};
}

std::string field_check_text(const Field& f, const FieldCheckReport& small, const FieldCheckReport& asymptotic) {
  std::ostringstream out;
  out << "preset: " << f.name() << " (dim " << f.dim() << ")\n";
  report_text(out, "small derivation", small);
  report_text(out, "asymptotic", asymptotic);
  return out.str();
}

json chain_json(const ChainDdeg& c) {
  return json{{"sequence", c.sequence}, {"stabilized", c.stabilized}, {"value", c.value}};
}

std::string chain_text(const ChainDdeg& c) {
  std::ostringstream out;
  out << "sequence:";
  for (auto d : c.sequence) out << " " << d;
  out << "\n" << (c.stabilized ? "stabilized at " : "not stabilized; last value ") << c.value << "\n";
  return out.str();
}

json approx_json(const ApproxEnumeration& en) {
  json arr = json::array();
  for (const auto& s : en.solutions) {
    arr.push_back(json{{"exponent", exponent_text(s.exponent)}, {"root", s.root.to_string()}, {"multiplicity", s.multiplicity}});
  }
  return arr;
}

json unravel_json(const UnravelResult& u) {
  return json{{"status", to_string(u.status)},
              {"f", u.f.to_string()},
              {"constraint", u.constraint.to_string()},
              {"steps", u.steps},
              {"warnings", u.warnings}};
}

}  // namespace adenewton::cli
