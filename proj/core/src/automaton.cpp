#include "pkaeq/automaton.hpp"

#include <algorithm>
#include <set>

#include "pkaeq/errors.hpp"

namespace pkaeq {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw InputError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

}  // namespace

Automaton::Automaton(std::vector<std::string> alphabet, std::vector<std::string> states,
                     std::vector<FreePolynomial> theta)
    : alphabet_(std::move(alphabet)), states_(std::move(states)), theta_(std::move(theta)) {
  if (alphabet_.size() > 256) throw InputError("alphabet has more than 256 letters");
  if (theta_.size() != states_.size()) {
    throw InputError("structure map must have one entry per state");
  }
  require_unique(alphabet_, "letter");
  require_unique(states_, "state");
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

std::optional<Letter> Automaton::find_letter(std::string_view name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<Letter>(it - alphabet_.begin());
}

std::vector<Diagnostic> validate(const Automaton& aut, bool strict) {
  std::vector<Diagnostic> out;
  for (StateId s = 0; s < aut.num_states(); ++s) {
    const auto& name = aut.states()[s];
    Rational mass = 0;
    for (const auto& [m, c] : aut.theta(s).terms()) {
      mass += c;
      for (const auto& [v, e] : m.factors()) {
        if (v.is_eps()) {
          if (!v.word.empty()) {
            out.push_back({s, "acceptance marker at a non-empty word in theta(" + name + ")"});
          }
        } else if (v.word.size() != 1) {
          out.push_back({s, "pending state must sit at a one-letter word in theta(" + name + ")"});
        } else if (v.word[0] >= aut.alphabet_size()) {
          out.push_back({s, "unknown letter in theta(" + name + ")"});
        } else if (v.state >= aut.num_states()) {
          out.push_back({s, "unknown state in theta(" + name + ")"});
        }
      }
      if (strict && (c < 0 || c > 1)) {
        out.push_back({s, "coefficient " + to_string(c) + " outside [0,1] at " + name});
      }
    }
    if (strict && mass != 1) {
      out.push_back({s, "mass " + to_string(mass) + " != 1 at " + name});
    }
  }
  return out;
}

void require_valid(const Automaton& aut, bool strict) {
  auto diags = validate(aut, strict);
  if (!diags.empty()) throw InputError(diags.front().message);
}

UnionResult disjoint_union(const Automaton& first, const Automaton& second) {
  if (first.alphabet() != second.alphabet()) throw InputError("alphabets differ");
  const std::set<std::string> left_names(first.states().begin(), first.states().end());
  const std::set<std::string> right_names(second.states().begin(), second.states().end());

  std::vector<std::string> names;
  std::set<std::string> taken;
  auto claim = [&](std::string name) {
    while (!taken.insert(name).second) name += "'";
    names.push_back(name);
  };
  for (const auto& n : first.states()) claim(right_names.count(n) ? n + "#1" : n);
  for (const auto& n : second.states()) claim(left_names.count(n) ? n + "#2" : n);

  UnionResult r;
  const auto offset = static_cast<StateId>(first.num_states());
  for (StateId s = 0; s < first.num_states(); ++s) r.left_states.push_back(s);
  for (StateId s = 0; s < second.num_states(); ++s) r.right_states.push_back(offset + s);

  auto rename_theta = [](const FreePolynomial& p, const std::vector<StateId>& map) {
    return substitute<Indeterminate, Indeterminate>(
        p, [](const Indeterminate&) -> std::optional<FreePolynomial> { return std::nullopt; },
        [&](const Indeterminate& v) {
          if (v.is_eps()) return v;
          return Indeterminate::state_at(v.word, v.state < map.size() ? map[v.state] : v.state);
        });
  };

  std::vector<FreePolynomial> theta;
  for (StateId s = 0; s < first.num_states(); ++s) {
    theta.push_back(rename_theta(first.theta(s), r.left_states));
  }
  for (StateId s = 0; s < second.num_states(); ++s) {
    theta.push_back(rename_theta(second.theta(s), r.right_states));
  }
  r.automaton = Automaton(first.alphabet(), std::move(names), std::move(theta));
  return r;
}

std::vector<Diagnostic> validate(const MeasureSeed& seed, std::size_t num_states, bool strict) {
  std::vector<Diagnostic> out;
  Rational total = 0;
  for (const auto& term : seed.terms) {
    total += term.weight;
    if (strict && term.weight < 0) {
      out.push_back({std::nullopt, "negative weight " + to_string(term.weight)});
    }
    for (StateId s : term.states) {
      if (s >= num_states) out.push_back({s, "unknown state in seed"});
    }
  }
  if (strict && total != 1) {
    out.push_back({std::nullopt, "seed weights sum to " + to_string(total) + ", not 1"});
  }
  return out;
}

MeasureSeed rename(const MeasureSeed& seed, const std::vector<StateId>& state_map) {
  MeasureSeed out = seed;
  for (auto& term : out.terms) {
    for (auto& s : term.states) s = state_map.at(s);
  }
  return out;
}

Polynomial seed_polynomial(const MeasureSeed& mu, std::size_t num_states) {
  Polynomial p;
  for (const auto& term : mu.terms) {
    std::vector<Monomial::Factor> factors;
    for (StateId s : term.states) {
      if (s >= num_states) throw InputError("unknown state in seed");
      factors.emplace_back(VarId{s}, 1);
    }
    p.add_term(Monomial(std::move(factors)), term.weight);
  }
  return p;
}

Polynomial seed(const MeasureSeed& mu, const MeasureSeed& nu, std::size_t num_states) {
  return seed_polynomial(mu, num_states) - seed_polynomial(nu, num_states);
}

}  // namespace pkaeq
