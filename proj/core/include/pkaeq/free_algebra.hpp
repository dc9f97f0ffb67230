#pragma once

// The free algebra Q[Sigma*.eps, Sigma*.S]: polynomials whose indeterminates
// are either an acceptance marker at a word (x.eps) or a state pending after
// a word (x.s), together with the prefix action and partial evaluation.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "pkaeq/poly.hpp"
#include "pkaeq/word.hpp"

namespace pkaeq {

using StateId = std::uint32_t;

struct Indeterminate {
  enum class Kind : std::uint8_t { Eps = 0, State = 1 };

  Kind kind = Kind::Eps;
  Word word;
  StateId state = 0;  // meaningful only for Kind::State

  static Indeterminate eps_at(Word w) { return {Kind::Eps, std::move(w), 0}; }
  static Indeterminate state_at(Word w, StateId s) { return {Kind::State, std::move(w), s}; }

  bool is_eps() const { return kind == Kind::Eps; }

  friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
  // eps-kind before state-kind, then shortlex word, then state index.
  friend bool operator<(const Indeterminate& a, const Indeterminate& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.word != b.word) return ShortLex{}(a.word, b.word);
    return a.state < b.state;
  }
};

using FreeMonomial = BasicMonomial<Indeterminate>;
using FreePolynomial = BasicPolynomial<Indeterminate>;

inline FreePolynomial eps_var(Word w = {}) {
  return FreePolynomial::variable(Indeterminate::eps_at(std::move(w)));
}
inline FreePolynomial state_var(Word w, StateId s) {
  return FreePolynomial::variable(Indeterminate::state_at(std::move(w), s));
}

/// Q[S] -> free algebra, s |-> (eps-word).s
FreePolynomial embed(const Polynomial& p);

/// Inverse of embed. Throws std::invalid_argument if p mentions an
/// acceptance marker or a state at a non-empty word.
Polynomial project_states(const FreePolynomial& p);

/// The prefix action x.-: every indeterminate's word w becomes x w.
FreePolynomial shift(const Word& x, const FreePolynomial& p);

/// Image of a single state under a (Sigma*, Q)-algebra morphism.
using StateImage = std::function<FreePolynomial(StateId)>;

/// How partial evaluation treats acceptance markers.
enum class EpsPolicy {
  Fixed,      // markers are left as they are (used by the decision pipeline)
  ApplyOnes,  // markers map to 1
};

/// Partial evaluation B.h: a state indeterminate at word x w with x in B
/// becomes x.(h(w.s)) = (x w).g(s); everything else except the markers (see
/// EpsPolicy) is fixed. Throws std::invalid_argument if B is not an antichain.
FreePolynomial prefix_substitute(std::span<const Word> antichain, const StateImage& image,
                                 EpsPolicy policy, const FreePolynomial& p);

/// The all-ones morphism 1; every indeterminate maps to 1.
inline Rational one_eval(const FreePolynomial& p) { return coeff_sum(p); }

/// Sparse acceptance multiplicities: word -> count, zero entries omitted.
using Profile = std::map<Word, std::uint32_t, ShortLex>;

/// m(beta) = product of (y.eps)^beta(y).
FreeMonomial profile_monomial(const Profile& profile);

/// Inverse of profile_monomial. Throws std::invalid_argument on a state
/// indeterminate.
Profile monomial_profile(const FreeMonomial& m);

/// Reporting order for profiles: profiles recording at least one acceptance
/// come first, ordered lexicographically by (word, multiplicity) pairs; the
/// empty profile comes last.
struct ProfileOrder {
  bool operator()(const Profile& a, const Profile& b) const;
};

}  // namespace pkaeq
