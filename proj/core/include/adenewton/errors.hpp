#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace adenewton {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PresetMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (zero where nonzero is
/// required, f outside the constraint set, non-homogeneous input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Truncation hides the answer: the quantity lies at or above the stored
/// precision bound. `bound_text` is the rendered bound.
class BelowPrecision : public Error {
 public:
  explicit BelowPrecision(std::string bound_text)
      : Error("unknown below precision O(t^" + bound_text + ")"), bound_(std::move(bound_text)) {}
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace adenewton
