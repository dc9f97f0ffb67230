#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "pkaeq/automaton.hpp"
#include "pkaeq/groebner.hpp"
#include "pkaeq/oracle.hpp"

namespace pkaeq {

/// Progress of one expansion stage.
struct StageTrace {
  std::size_t stage = 0;
  std::size_t expanded = 0;     // generators whose derivatives were taken
  std::size_t derivatives = 0;  // nonzero derivatives produced
  std::size_t adopted = 0;      // new generators (not yet in the ideal)
  std::size_t basis_size = 0;   // Groebner basis size after the stage
};

struct DecideConfig {
  bool strict_validation = true;
  std::size_t max_stages = 10'000;
  std::size_t witness_depth_cap = 8;
  bool find_witness = true;
  /// Re-check the loop invariants at every stage and throw
  /// InvariantViolation on failure: the seed stays in the ideal, generators
  /// lie in ker 1, and the ideal grows strictly between stages.
  bool check_invariants = false;
  MonomialOrder order = MonomialOrder::grevlex();
  std::function<void(const StageTrace&)> on_stage;
};

struct DerivationStep {
  Letter letter = 0;
  std::uint32_t degree = 0;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Equivalent {
  std::size_t stages = 0;
  std::size_t generators = 0;
  std::size_t basis_size = 0;
  GroebnerBasis basis;
  std::vector<Polynomial> generator_set;
};

struct NotEquivalent {
  Polynomial failing_polynomial;
  std::vector<DerivationStep> derivation_path;  // empty: the seed itself failed
  std::optional<Witness> witness;
  std::size_t stages = 0;
  std::size_t generators = 0;
  std::size_t basis_size = 0;
};

using Verdict = std::variant<Equivalent, NotEquivalent>;

inline bool is_equivalent(const Verdict& v) { return std::holds_alternative<Equivalent>(v); }

/// Decides whether the seeds `left` and `right` (polynomials in Q[S] over the
/// automaton's states) have the same behavior, by saturating the ideal
/// generated by left - right under single-letter derivatives.
///
/// Throws InputError when validation fails and ResourceError when
/// cfg.max_stages stages pass without a verdict.
Verdict decide(const Automaton& aut, const Polynomial& left, const Polynomial& right,
               const DecideConfig& cfg = {});

/// decide() on a single seed p; witnesses then report p's profile mass as
/// "left" and 0 as "right".
Verdict decide(const Automaton& aut, const Polynomial& p, const DecideConfig& cfg = {});

}  // namespace pkaeq
