#pragma once

// Command dispatch for the adenewton tool. Reports are deterministic; exit
// codes are 0 on success, 2 when a solve produced only stuck branches, 1 on errors.

#include <exception>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adenewton/cli/config.hpp"
#include "adenewton/solver.hpp"

namespace adenewton::cli {

struct AnalyzeCommand {
  ADE eq;
};
struct SolveCommand {
  ADE eq;
  GroupElement target;
  SolveOptions options;
};
struct EqualizerCommand {
  DiffPoly p;
  DiffPoly q;
};
struct DiagramCommand {
  DiffPoly p;
  EConstraint e;
};
struct CheckFieldCommand {
  Field field;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};
struct ChainDdegCommand {
  DiffPoly p;
  CutChain chain;
};

using Command = std::variant<AnalyzeCommand, SolveCommand, EqualizerCommand, DiagramCommand, CheckFieldCommand, ChainDdegCommand>;

/// Raw command line: subcommand, positional arguments and per-command options.
struct Invocation {
  std::string name;
  std::vector<std::string> args;
  /// diagram: the constraint set ("all", "Y ≼ 1", ...)
  std::optional<std::string> in;
  /// chain-ddeg: step used for the last point
  std::optional<std::string> tail;
};

/// Parses and validates everything; throws on bad input.
Command parse_command(const Invocation& inv, const Config& config);

struct RunResult {
  int exit_code = 0;
  std::string output;
};

RunResult run(const Command& cmd, const Config& config);
/// parse_command + run; errors become exit code 1 with a rendered message.
RunResult run(const Invocation& inv, const Config& config);

std::string render_error(const std::exception& e, Format format);

}  // namespace adenewton::cli
