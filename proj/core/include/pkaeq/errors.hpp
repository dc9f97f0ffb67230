#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pkaeq {

/// Malformed or invalid user input (automaton, seed, problem file).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem-file syntax error with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource guard (stage cap) was exhausted before a verdict.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant check failed (only raised when checking is on).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pkaeq
