#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pkaeq/free_algebra.hpp"
#include "pkaeq/poly.hpp"

namespace pkaeq {

/// A probabilistic automaton with angelic nondeterminism. Each state's
/// structure map theta(s) is a polynomial over the acceptance marker eps and
/// the one-letter pending states a.t: the term c * eps^n * prod (a.t) means
/// "with probability c, accept the current word n times and spawn one agent
/// at t after reading a for each factor".
class Automaton {
 public:
  Automaton() = default;

  /// Throws InputError on duplicate names, more than 256 letters, or a
  /// theta table whose size differs from the state count. The shape of each
  /// theta(s) is checked by validate(), not here.
  Automaton(std::vector<std::string> alphabet, std::vector<std::string> states,
            std::vector<FreePolynomial> theta);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  std::size_t num_states() const { return states_.size(); }

  const FreePolynomial& theta(StateId s) const { return theta_.at(s); }
  const std::vector<FreePolynomial>& theta_table() const { return theta_; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<Letter> find_letter(std::string_view name) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::vector<FreePolynomial> theta_;
};

struct Diagnostic {
  std::optional<StateId> state;
  std::string message;
};

/// Structural checks always: every indeterminate of theta(s) is eps or a.t
/// with a one-letter word and known letter/state. `strict` additionally
/// requires a probability distribution: coefficients in [0,1] summing to 1.
/// Returns an empty vector when the automaton is valid.
std::vector<Diagnostic> validate(const Automaton& aut, bool strict);

/// Throws InputError carrying the first diagnostic, if any.
void require_valid(const Automaton& aut, bool strict);

/// Result of merging two automata over the same alphabet.
struct UnionResult {
  Automaton automaton;
  std::vector<StateId> left_states;   // old id in the first input -> new id
  std::vector<StateId> right_states;  // old id in the second input -> new id
};

/// States of the first automaton come first. A name used by both inputs is
/// suffixed "#1" / "#2"; other names are kept. Throws InputError when the
/// alphabets differ.
UnionResult disjoint_union(const Automaton& first, const Automaton& second);

/// A finite signed measure over multisets of states:
/// sum of weight * point mass at the multiset.
struct MeasureTerm {
  Rational weight;
  std::vector<StateId> states;  // multiset, repetition = multiplicity

  friend bool operator==(const MeasureTerm&, const MeasureTerm&) = default;
};

struct MeasureSeed {
  std::vector<MeasureTerm> terms;

  friend bool operator==(const MeasureSeed&, const MeasureSeed&) = default;
};

/// Strict: weights nonnegative and summing to 1. Always: states in range.
std::vector<Diagnostic> validate(const MeasureSeed& seed, std::size_t num_states, bool strict);

/// Renames the states of a seed through a state map (e.g. from disjoint_union).
MeasureSeed rename(const MeasureSeed& seed, const std::vector<StateId>& state_map);

/// The polynomial of a measure: sum of weight * prod s^multiplicity.
/// Throws InputError on a state id >= num_states.
Polynomial seed_polynomial(const MeasureSeed& mu, std::size_t num_states);

/// seed_polynomial(mu) - seed_polynomial(nu).
Polynomial seed(const MeasureSeed& mu, const MeasureSeed& nu, std::size_t num_states);

}  // namespace pkaeq
