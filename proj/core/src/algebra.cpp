#include "pkaeq/algebra.hpp"

#include <set>

#include "pkaeq/errors.hpp"

namespace pkaeq {

StateImage structure_map(const Automaton& aut) {
  return [&aut](StateId s) { return aut.theta(s); };
}

StateImage ones() {
  return [](StateId) { return FreePolynomial(1); };
}

FreePolynomial theta_tree(const Automaton& aut, const FiniteTree& tree, const Polynomial& p) {
  // WordSet iterates in shortlex order, which is breadth-first.
  return theta_tree(aut, std::vector<Word>(tree.words().begin(), tree.words().end()), p);
}

FreePolynomial theta_tree(const Automaton& aut, const std::vector<Word>& order,
                          const Polynomial& p) {
  std::set<Word> seen;
  for (const Word& x : order) {
    if (!x.empty() && !seen.count(Word(x.begin(), x.end() - 1))) {
      throw InputError("processing order is not a tree traversal");
    }
    if (!seen.insert(x).second) throw InputError("processing order repeats a word");
  }

  const StateImage theta = structure_map(aut);
  FreePolynomial q = embed(p);
  for (const Word& x : order) {
    const Word single[] = {x};
    q = prefix_substitute(single, theta, EpsPolicy::Fixed, q);
  }
  return q;
}

std::map<Profile, FreePolynomial> d_components(const Automaton& aut, const FiniteTree& tree,
                                               const Polynomial& p) {
  std::map<Profile, FreePolynomial> out;
  auto graded = grade_by<Indeterminate>(theta_tree(aut, tree, p),
                                        [](const Indeterminate& v) { return v.is_eps(); });
  for (auto& [key, value] : graded) out.emplace(monomial_profile(key), std::move(value));
  return out;
}

namespace {

// Sets every pending state at a word other than x to 1 and strips x from the
// rest. Acceptance markers must already be graded out.
Polynomial marginalize_at(const FreePolynomial& p, const Word& x) {
  return substitute<Indeterminate, VarId>(
      p, [&](const Indeterminate& v) -> std::optional<Polynomial> {
        if (v.is_eps()) throw std::invalid_argument("unexpected acceptance marker");
        if (v.word != x) return Polynomial(1);
        return Polynomial::variable(VarId{v.state});
      });
}

}  // namespace

std::map<Profile, Polynomial> marginal(const Automaton& aut, const FiniteTree& tree,
                                       const Word& x, const Polynomial& p) {
  if (!boundary(tree, aut.alphabet_size()).count(x)) {
    throw InputError("marginal word is not on the boundary of the tree");
  }
  std::map<Profile, Polynomial> out;
  for (const auto& [profile, component] : d_components(aut, tree, p)) {
    Polynomial m = marginalize_at(component, x);
    if (!m.is_zero()) out.emplace(profile, std::move(m));
  }
  return out;
}

std::map<std::uint32_t, Polynomial> derivative(const Automaton& aut, const Polynomial& b,
                                               Letter a) {
  const Word root[] = {Word{}};
  const FreePolynomial expanded =
      prefix_substitute(root, structure_map(aut), EpsPolicy::Fixed, embed(b));
  const Word letter{a};

  std::map<std::uint32_t, Polynomial> out;
  auto graded = grade_by<Indeterminate>(expanded, [](const Indeterminate& v) { return v.is_eps(); });
  for (const auto& [key, component] : graded) {
    Polynomial d = marginalize_at(component, letter);
    if (!d.is_zero()) out.emplace(key.degree(), std::move(d));
  }
  return out;
}

DerivativeTable::DerivativeTable(const Automaton& aut) : num_states_(aut.num_states()) {
  const VarId marker{static_cast<std::uint32_t>(num_states_)};
  per_letter_.resize(aut.alphabet_size());
  for (std::size_t a = 0; a < aut.alphabet_size(); ++a) {
    for (StateId s = 0; s < num_states_; ++s) {
      per_letter_[a].push_back(substitute<Indeterminate, VarId>(
          aut.theta(s), [&](const Indeterminate& v) -> std::optional<Polynomial> {
            if (v.is_eps()) return Polynomial::variable(marker);
            if (v.word.size() == 1 && v.word[0] == a) return Polynomial::variable(VarId{v.state});
            return Polynomial(1);
          }));
    }
  }
}

std::map<std::uint32_t, Polynomial> DerivativeTable::operator()(const Polynomial& b,
                                                                Letter a) const {
  const auto& images = per_letter_.at(a);
  const VarId marker{static_cast<std::uint32_t>(num_states_)};
  const Polynomial expanded = substitute<VarId, VarId>(
      b, [&](const VarId& v) -> std::optional<Polynomial> { return images.at(v.index); });

  std::map<std::uint32_t, Polynomial> out;
  for (auto& [key, component] :
       grade_by<VarId>(expanded, [&](const VarId& v) { return v == marker; })) {
    out.emplace(key.degree(), std::move(component));
  }
  return out;
}

}  // namespace pkaeq
