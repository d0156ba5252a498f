#include "adenewton/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "adenewton/errors.hpp"

namespace adenewton::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T to_number(const std::string& v, std::size_t line, std::size_t col) {
  try {
    std::size_t used = 0;
    const unsigned long long n = std::stoull(v, &used);
    if (used != v.size() || v[0] == '-') throw std::invalid_argument(v);
    return static_cast<T>(n);
  } catch (const std::logic_error&) {
    throw ParseError("expected a non-negative integer, got '" + v + "'", line, col);
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw DomainError("unknown output format '" + name + "' (expected text or json)");
}

Config parse_config(std::string_view text, Config base) {
  Config c = std::move(base);
  std::string table;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    // '#' inside a quoted value is kept
    bool quoted = false;
    std::size_t cut = raw.size();
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '"') quoted = !quoted;
      if (raw[k] == '#' && !quoted) {
        cut = k;
        break;
      }
    }
    const std::string s = trim(std::string_view(raw).substr(0, cut));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("unterminated table header", line, 1);
      table = trim(std::string_view(s).substr(1, s.size() - 2));
      if (table != "field" && table != "solver" && table != "output") throw ParseError("unknown table [" + table + "]", line, 1);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line, 1);
    const std::string key = trim(std::string_view(s).substr(0, eq));
    std::string value = trim(std::string_view(s).substr(eq + 1));
    const std::size_t col = raw.find(value) + 1;
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    } else if (!value.empty() && value.front() == '"') {
      throw ParseError("unterminated string", line, col);
    }
    if (table.empty()) throw ParseError("key '" + key + "' outside a table", line, 1);
    const std::string full = table + "." + key;
    if (full == "field.preset") {
      c.preset = value;
    } else if (full == "field.dim") {
      c.dim = to_number<std::size_t>(value, line, col);
    } else if (full == "solver.target") {
      c.target = value;
    } else if (full == "solver.branch_bound") {
      c.branch_bound = to_number<unsigned>(value, line, col);
    } else if (full == "solver.depth") {
      c.depth = to_number<unsigned>(value, line, col);
    } else if (full == "solver.samples") {
      c.samples = to_number<std::size_t>(value, line, col);
    } else if (full == "solver.seed") {
      c.seed = to_number<std::uint64_t>(value, line, col);
    } else if (full == "output.format") {
      try {
        c.format = parse_format(value);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line, col);
      }
    } else {
      throw ParseError("unknown key '" + full + "'", line, 1);
    }
  }
  return c;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace adenewton::cli
