#pragma once

// Depth-bounded semantics: the exact probability of every acceptance profile
// over a finite tree. Computed by a recursion over subtrees that does not go
// through theta_tree, so it can be used to cross-check the decision procedure.

#include <cstddef>
#include <map>
#include <optional>

#include "pkaeq/automaton.hpp"
#include "pkaeq/free_algebra.hpp"
#include "pkaeq/word.hpp"

namespace pkaeq {

struct TruncatedSemantics {
  FiniteTree tree;
  std::map<Profile, Rational, ProfileOrder> values;  // absent profiles have value 0

  Rational operator[](const Profile& profile) const {
    auto it = values.find(profile);
    return it == values.end() ? Rational(0) : it->second;
  }
  Rational total() const;

  friend bool operator==(const TruncatedSemantics&, const TruncatedSemantics&) = default;
};

/// Profile probabilities of the seed p over the tree.
TruncatedSemantics truncated_semantics(const Automaton& aut, const Polynomial& p,
                                       const FiniteTree& tree);

/// Same over the tree of all words shorter than `depth`.
TruncatedSemantics truncated_semantics(const Automaton& aut, const Polynomial& p,
                                       std::size_t depth);

/// Truncated semantics over all words shorter than `depth` agree exactly.
bool equivalent_to_depth(const Automaton& aut, const Polynomial& left, const Polynomial& right,
                         std::size_t depth);

struct Witness {
  std::size_t depth = 0;
  Profile profile;
  Rational left;
  Rational right;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Least depth in [1, cap] at which the two seeds are distinguished, and the
/// first distinguishing profile there in ProfileOrder.
std::optional<Witness> find_witness(const Automaton& aut, const Polynomial& left,
                                    const Polynomial& right, std::size_t cap);

}  // namespace pkaeq
