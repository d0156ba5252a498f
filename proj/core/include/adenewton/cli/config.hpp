#pragma once

// Run configuration. Files use a small TOML subset: [field], [solver] and
// [output] tables of key = value lines, '#' comments, quoted or bare values.
//
//   [field]   preset = "h-type" | "monotone"; dim = 1
//   [solver]  target = "4"; branch_bound = 16; depth = 32; samples = 200; seed = 1
//   [output]  format = "text" | "json"

#include <cstdint>
#include <string>
#include <string_view>

#include "adenewton/field.hpp"

namespace adenewton::cli {

enum class Format { Text, Json };

struct Config {
  std::string preset = "h-type";
  std::size_t dim = 1;
  /// Default precision, an exponent in the syntax of parse_exponent.
  std::string target = "4";
  unsigned branch_bound = 16;
  unsigned depth = 32;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  Format format = Format::Text;

  Field field() const { return Field::from_name(preset, dim); }
};

/// Applies the file's keys on top of `base`. Throws ParseError on malformed lines or unknown keys.
Config parse_config(std::string_view text, Config base = {});
Config load_config(const std::string& path, Config base = {});

Format parse_format(const std::string& name);

}  // namespace adenewton::cli
