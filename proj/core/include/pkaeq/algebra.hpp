#pragma once

// Extension of the structure map to finite trees and the graded components
// ("derivatives") that the decision procedure iterates.

#include <cstdint>
#include <map>
#include <vector>

#include "pkaeq/automaton.hpp"
#include "pkaeq/free_algebra.hpp"
#include "pkaeq/word.hpp"

namespace pkaeq {

/// s |-> theta(s).
StateImage structure_map(const Automaton& aut);

/// s |-> 1.
StateImage ones();

/// theta_A(p) for p in Q[S]: run the automaton from p, pausing every agent
/// that reaches the boundary of A. The result lives in
/// Q[A.eps, boundary(A).S]. Nodes are processed breadth-first.
FreePolynomial theta_tree(const Automaton& aut, const FiniteTree& tree, const Polynomial& p);

/// Same, with an explicit processing order. Throws InputError if `order` is
/// not a permutation of the tree compatible with the prefix order.
FreePolynomial theta_tree(const Automaton& aut, const std::vector<Word>& order,
                          const Polynomial& p);

/// d_A^m(p): theta_A(p) graded by its acceptance-marker monomial, keyed by
/// the corresponding profile. Values lie in Q[boundary(A).S].
std::map<Profile, FreePolynomial> d_components(const Automaton& aut, const FiniteTree& tree,
                                               const Polynomial& p);

/// d_{A,x}^m(p): d_A^m(p) with every pending state away from x set to 1 and
/// the prefix x stripped. Throws InputError unless x is on the boundary of A.
std::map<Profile, Polynomial> marginal(const Automaton& aut, const FiniteTree& tree,
                                       const Word& x, const Polynomial& p);

/// Single-letter derivatives n |-> d_{eps,a}^{eps^n}(b), computed literally:
/// substitute theta into b, grade by the eps-degree, set b'.s to 1 for every
/// letter b' != a and strip the prefix a. Zero components are omitted.
std::map<std::uint32_t, Polynomial> derivative(const Automaton& aut, const Polynomial& b,
                                               Letter a);

/// Cached single-letter derivatives. For each letter the structure map is
/// marginalized once into Q[eps][S]; a derivative is then one substitution
/// and a grading. Agrees with derivative() since both routes compose the
/// same algebra homomorphisms.
class DerivativeTable {
 public:
  explicit DerivativeTable(const Automaton& aut);

  std::map<std::uint32_t, Polynomial> operator()(const Polynomial& b, Letter a) const;

  std::size_t alphabet_size() const { return per_letter_.size(); }

 private:
  std::size_t num_states_ = 0;
  // per_letter_[a][s] is theta(s) marginalized to letter a, with the marker
  // eps represented by VarId{num_states_}.
  std::vector<std::vector<Polynomial>> per_letter_;
};

}  // namespace pkaeq
