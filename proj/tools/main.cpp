#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adenewton/cli/commands.hpp"

using namespace adenewton::cli;

int main(int argc, char** argv) {
  CLI::App app{"Newton diagrams and solvers for asymptotic differential equations", "adenewton"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path, preset, target, format, in, tail;
  std::optional<std::size_t> dim, samples;
  std::optional<unsigned> branch_bound, depth;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "TOML-style config file");
  app.add_option("--preset", preset, "field preset: h-type or monotone");
  app.add_option("--dim", dim, "dimension of the value group");
  app.add_option("--target", target, "target precision p/q");
  app.add_option("--branch-bound", branch_bound, "maximum number of solver branches");
  app.add_option("--depth", depth, "maximum refinement depth");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--samples", samples, "samples for check-field");
  app.add_option("--seed", seed, "random seed for check-field");

  std::vector<std::string> args;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "dominant degree, diagram, approximate solutions and unravelling of an equation"},
      {"solve", "solve an equation to the target precision"},
      {"equalizer", "equalizer of two homogeneous differential polynomials"},
      {"diagram", "Newton diagram of a differential polynomial"},
      {"check-field", "sample the field preset's axioms"},
      {"chain-ddeg", "dominant degree along a cut chain"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", args, "equation, polynomials or chain points (@file reads a file)");
    if (name == "diagram") sub->add_option("--in", in, "constraint set, e.g. all or \"Y preceq 1\"");
    if (name == "chain-ddeg") sub->add_option("--tail", tail, "step for the last chain point");
  }

  // "-t" and friends are expressions, not flags; a leading space hides them from option parsing
  std::vector<std::string> argv_text(argv + 1, argv + argc);
  for (auto& a : argv_text) {
    if (a.size() >= 2 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(a.begin(), ' ');
  }
  std::reverse(argv_text.begin(), argv_text.end());

  try {
    app.parse(argv_text);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Config config;
  try {
    if (config_path) config = load_config(*config_path);
    if (preset) config.preset = *preset;
    if (dim) config.dim = *dim;
    if (target) config.target = *target;
    if (branch_bound) config.branch_bound = *branch_bound;
    if (depth) config.depth = *depth;
    if (samples) config.samples = *samples;
    if (seed) config.seed = *seed;
    if (format) config.format = parse_format(*format);
  } catch (const std::exception& e) {
    std::cerr << render_error(e, format && *format == "json" ? Format::Json : Format::Text);
    return 1;
  }

  Invocation inv;
  inv.name = app.get_subcommands().front()->get_name();
  inv.args = args;
  inv.in = in;
  inv.tail = tail;
  const RunResult r = run(inv, config);
  (r.exit_code == 1 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
