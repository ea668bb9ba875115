#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubering {

/// Caller violated an operation's precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal algebraic identity does not hold (e.g. boundary of a boundary
/// is nonzero, or an extension step found no class to eliminate).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed picture text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input picture is valid but unsuitable for the pipeline
/// (empty or disconnected foreground).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubering
