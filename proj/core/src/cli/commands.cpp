#include "adenewton/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "adenewton/cli/parser.hpp"
#include "adenewton/errors.hpp"
#include "render.hpp"

namespace adenewton::cli {

namespace {

// "@path" reads the argument from a file
std::string argument_text(const std::string& arg) {
  if (arg.size() < 2 || arg[0] != '@') return arg;
  std::ifstream f(arg.substr(1));
  if (!f) throw Error("cannot read '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void require_args(const Invocation& inv, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (inv.args.size() < lo || inv.args.size() > hi) throw DomainError(inv.name + " expects " + usage);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Command parse_command(const Invocation& inv, const Config& config) {
  const Field field = config.field();
  if (inv.in && inv.name != "diagram") throw DomainError("--in applies to diagram only");
  if (inv.tail && inv.name != "chain-ddeg") throw DomainError("--tail applies to chain-ddeg only");
  if (inv.name == "analyze") {
    require_args(inv, 1, 1, "one equation");
    return AnalyzeCommand{parse_ade(argument_text(inv.args[0]), field)};
  }
  if (inv.name == "solve") {
    require_args(inv, 1, 1, "one equation");
    return SolveCommand{parse_ade(argument_text(inv.args[0]), field), parse_exponent(config.target, field.dim()),
                        SolveOptions{config.branch_bound, config.depth}};
  }
  if (inv.name == "equalizer") {
    require_args(inv, 2, 2, "two homogeneous differential polynomials");
    return EqualizerCommand{parse_poly(argument_text(inv.args[0]), field), parse_poly(argument_text(inv.args[1]), field)};
  }
  if (inv.name == "diagram") {
    require_args(inv, 1, 1, "one differential polynomial");
    return DiagramCommand{parse_poly(argument_text(inv.args[0]), field), parse_constraint(inv.in.value_or("all"), field)};
  }
  if (inv.name == "check-field") {
    require_args(inv, 0, 0, "no arguments");
    if (config.samples == 0) throw DomainError("check-field needs at least one sample");
    return CheckFieldCommand{field, config.samples, config.seed};
  }
  if (inv.name == "chain-ddeg") {
    require_args(inv, 2, 1000, "a differential polynomial and at least one chain point");
    CutChain chain;
    for (std::size_t k = 1; k < inv.args.size(); ++k) chain.points.push_back(parse_series(argument_text(inv.args[k]), field));
    if (inv.tail) chain.tail_step = parse_exponent(*inv.tail, field.dim());
    return ChainDdegCommand{parse_poly(argument_text(inv.args[0]), field), std::move(chain)};
  }
  throw DomainError("unknown command '" + inv.name + "'");
}

namespace {

RunResult run_one(const AnalyzeCommand& c, Format fmt) {
  const ADE& eq = c.eq;
  const unsigned d = ddeg_of(eq);
  json j{{"equation", eq.to_string()}, {"ddeg", d}, {"quasilinear", d == 1}};
  std::ostringstream text;
  text << "equation: " << eq.to_string() << "\n";
  text << "ddeg: " << d << (d == 1 ? " (quasilinear)" : "") << "\n";
  if (eq.field().dim() == 1) {
    const NewtonDiagram diagram = newton_diagram(eq.poly(), eq.constraint());
    const auto starting = algebraic_starting_monomials(eq.poly(), eq.constraint());
    j["diagram"] = diagram_json(diagram, starting);
    text << diagram_text(diagram, starting);
    const ApproxEnumeration en = enumerate_approx_solutions(eq, 1);
    j["approximate_solutions"] = approx_json(en);
    text << "approximate solutions:";
    if (en.solutions.empty()) text << " none";
    text << "\n";
    for (const auto& s : en.solutions) {
      text << "  " << s.value(eq.field()).to_string() << " (multiplicity " << s.multiplicity << ")\n";
    }
    if (d >= 1) {
      const UnravelledCheck check = is_unravelled(eq);
      j["unravelled"] = json{{"value", check.value}, {"warnings", check.warnings}};
      text << "unravelled: " << (check.value ? "yes" : "no") << "\n";
      for (const auto& w : check.warnings) text << "  warning: " << w << "\n";
      const UnravelResult u = unravel(eq, 32);
      j["unravel"] = unravel_json(u);
      text << "unravel: " << to_string(u.status) << " after " << u.steps << " step(s); f = " << u.f.to_string() << ", "
           << u.constraint.to_string() << "\n";
      for (const auto& w : u.warnings) text << "  warning: " << w << "\n";
    }
  }
  return RunResult{0, fmt == Format::Json ? dump(j) : text.str()};
}

RunResult run_one(const SolveCommand& c, Format fmt) {
  const auto branches = solve(c.eq, c.target, c.options);
  bool any_solved = false;
  for (const auto& b : branches) any_solved = any_solved || is_solved(b.status);
  const int code = any_solved ? 0 : 2;
  if (fmt == Format::Json) return RunResult{code, dump(branches_json(branches))};
  return RunResult{code, "equation: " + c.eq.to_string() + "\ntarget: " + exponent_text(c.target) + "\n" + branches_text(branches)};
}

RunResult run_one(const EqualizerCommand& c, Format fmt) {
  const GroupElement e = equalizer(c.p, c.q);
  if (fmt == Format::Json) return RunResult{0, dump(json{{"equalizer", exponent_text(e)}})};
  const std::string p = render_power(e);
  return RunResult{0, "equalizer: " + (p.empty() ? std::string("1") : p) + "\n"};
}

RunResult run_one(const DiagramCommand& c, Format fmt) {
  const NewtonDiagram d = newton_diagram(c.p, c.e);
  const auto starting = algebraic_starting_monomials(c.p, c.e);
  if (fmt == Format::Json) return RunResult{0, dump(diagram_json(d, starting))};
  return RunResult{0, diagram_text(d, starting)};
}

RunResult run_one(const CheckFieldCommand& c, Format fmt) {
  const FieldCheckReport small = check_small_derivation(c.field, c.samples, c.seed);
  const FieldCheckReport asym = check_asymptotic(c.field, c.samples, c.seed);
  if (fmt == Format::Json) return RunResult{0, dump(field_check_json(c.field, small, asym))};
  return RunResult{0, field_check_text(c.field, small, asym)};
}

RunResult run_one(const ChainDdegCommand& c, Format fmt) {
  const ChainDdeg r = ddeg_along_chain(c.p, c.chain);
  if (fmt == Format::Json) return RunResult{0, dump(chain_json(r))};
  return RunResult{0, chain_text(r)};
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const BelowPrecision*>(&e)) return "BelowPrecision";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const PresetMismatch*>(&e)) return "PresetMismatch";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

}  // namespace

RunResult run(const Command& cmd, const Config& config) {
  return std::visit([&](const auto& c) { return run_one(c, config.format); }, cmd);
}

RunResult run(const Invocation& inv, const Config& config) {
  try {
    return run(parse_command(inv, config), config);
  } catch (const std::exception& e) {
    return RunResult{1, render_error(e, config.format)};
  }
}

std::string render_error(const std::exception& e, Format format) {
  const std::string kind = error_kind(e);
  if (format == Format::Json) {
    json j{{"kind", kind}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      j["line"] = pe->line();
      j["column"] = pe->column();
    }
    return dump(json{{"error", j}});
  }
  return "error: " + kind + ": " + e.what() + "\n";
}

}  // namespace adenewton::cli
