#include "pkaeq/oracle.hpp"

#include <algorithm>
#include <utility>

namespace pkaeq {

namespace {

// Profile distribution of a single agent started in a state, as a polynomial
// in the acceptance markers of the tree. For a nonempty tree A:
//   D(A, s) = theta(s)[a.t := a.D(A/a, t)],   D(empty, s) = 1,
// where A/a is the subtree below letter a. Memoized on (tree, state).
class SemanticsBuilder {
 public:
  explicit SemanticsBuilder(const Automaton& aut) : aut_(aut) {}

  const FreePolynomial& state(const FiniteTree& tree, StateId s) {
    auto key = std::make_pair(tree, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    FreePolynomial value(1);
    if (!tree.empty()) {
      std::map<Letter, FiniteTree> subtrees;
      value = substitute<Indeterminate, Indeterminate>(
          aut_.theta(s), [&](const Indeterminate& v) -> std::optional<FreePolynomial> {
            if (v.is_eps()) return std::nullopt;
            const Letter a = v.word.at(0);
            auto sub = subtrees.find(a);
            if (sub == subtrees.end()) sub = subtrees.emplace(a, tree.subtree(a)).first;
            if (sub->second.empty()) return FreePolynomial(1);
            return shift(v.word, state(sub->second, v.state));
          });
    }
    return memo_.emplace(std::move(key), std::move(value)).first->second;
  }

  TruncatedSemantics seed(const FiniteTree& tree, const Polynomial& p) {
    const FreePolynomial dist = substitute<VarId, Indeterminate>(
        p, [&](const VarId& v) -> std::optional<FreePolynomial> { return state(tree, v.index); });
    TruncatedSemantics out{tree, {}};
    for (const auto& [m, c] : dist.terms()) out.values.emplace(monomial_profile(m), c);
    return out;
  }

  // Exact shortcut: states with identical distributions are merged, and seeds
  // that coincide after merging have equal semantics without expanding them.
  bool same_after_merging(const FiniteTree& tree, const Polynomial& left, const Polynomial& right) {
    std::map<VarId, Polynomial> rename;
    std::vector<StateId> representatives;
    for (StateId s = 0; s < aut_.num_states(); ++s) {
      const FreePolynomial& d = state(tree, s);
      auto rep = std::find_if(representatives.begin(), representatives.end(),
                              [&](StateId r) { return state(tree, r) == d; });
      if (rep == representatives.end()) {
        representatives.push_back(s);
      } else {
        rename[VarId{s}] = Polynomial::variable(VarId{*rep});
      }
    }
    return substitute(left, rename) == substitute(right, rename);
  }

  bool equal(const FiniteTree& tree, const Polynomial& left, const Polynomial& right) {
    return same_after_merging(tree, left, right) || seed(tree, left) == seed(tree, right);
  }

 private:
  const Automaton& aut_;
  std::map<std::pair<FiniteTree, StateId>, FreePolynomial> memo_;
};

// First profile (in ProfileOrder) on which the two tables differ.
std::optional<Witness> first_difference(const TruncatedSemantics& l, const TruncatedSemantics& r,
                                        std::size_t depth) {
  const ProfileOrder less;
  auto i = l.values.begin();
  auto j = r.values.begin();
  while (i != l.values.end() || j != r.values.end()) {
    if (j == r.values.end() || (i != l.values.end() && less(i->first, j->first))) {
      return Witness{depth, i->first, i->second, 0};
    }
    if (i == l.values.end() || less(j->first, i->first)) {
      return Witness{depth, j->first, 0, j->second};
    }
    if (i->second != j->second) return Witness{depth, i->first, i->second, j->second};
    ++i;
    ++j;
  }
  return std::nullopt;
}

}  // namespace

Rational TruncatedSemantics::total() const {
  Rational t = 0;
  for (const auto& [profile, value] : values) t += value;
  return t;
}

TruncatedSemantics truncated_semantics(const Automaton& aut, const Polynomial& p,
                                       const FiniteTree& tree) {
  return SemanticsBuilder(aut).seed(tree, p);
}

TruncatedSemantics truncated_semantics(const Automaton& aut, const Polynomial& p,
                                       std::size_t depth) {
  return truncated_semantics(aut, p, FiniteTree::full(aut.alphabet_size(), depth));
}

bool equivalent_to_depth(const Automaton& aut, const Polynomial& left, const Polynomial& right,
                         std::size_t depth) {
  SemanticsBuilder builder(aut);
  const FiniteTree tree = FiniteTree::full(aut.alphabet_size(), depth);
  return builder.equal(tree, left, right);
}

std::optional<Witness> find_witness(const Automaton& aut, const Polynomial& left,
                                    const Polynomial& right, std::size_t cap) {
  SemanticsBuilder builder(aut);
  for (std::size_t depth = 1; depth <= cap; ++depth) {
    const FiniteTree tree = FiniteTree::full(aut.alphabet_size(), depth);
    if (builder.same_after_merging(tree, left, right)) continue;
    if (auto w = first_difference(builder.seed(tree, left), builder.seed(tree, right), depth)) {
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace pkaeq
