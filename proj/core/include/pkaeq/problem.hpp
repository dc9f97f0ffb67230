#pragma once

// Line-oriented problem files:
//
//   # comment
//   alphabet a b
//   state s
//   state u
//   trans s = 1/2 eps + 1/2 a.s
//   trans u = 1/2 eps^2 + 1/2 (a.u)
//   left 1 { s }
//   right 1 { u }
//
// Letters are single characters. A state without a trans line has theta = 0.
// Repeated left/right lines accumulate measure terms.

#include <string>
#include <string_view>

#include "pkaeq/automaton.hpp"

namespace pkaeq {

struct Problem {
  Automaton automaton;
  MeasureSeed left;
  MeasureSeed right;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Throws ParseError (with line and column) on malformed input, undeclared
/// identifiers or duplicate declarations.
Problem parse_problem(std::string_view text);

/// Reads and parses a file. Throws InputError if it cannot be opened.
Problem load_problem(const std::string& path);

/// Canonical text form; parse_problem(print_problem(p)) == p.
std::string print_problem(const Problem& problem);

/// theta(s) in problem-file syntax, e.g. "1/2 eps + 1/2 a.s".
std::string format_theta(const Automaton& aut, const FreePolynomial& theta);

}  // namespace pkaeq
