#include "pkaeq/free_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pkaeq {

FreePolynomial embed(const Polynomial& p) {
  FreePolynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<FreeMonomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) {
      factors.emplace_back(Indeterminate::state_at({}, v.index), e);
    }
    out.add_term(FreeMonomial(std::move(factors)), c);
  }
  return out;
}

Polynomial project_states(const FreePolynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [v, e] : m.factors()) {
      if (v.is_eps() || !v.word.empty()) {
        throw std::invalid_argument("polynomial is not in Q[S]");
      }
      factors.emplace_back(VarId{v.state}, e);
    }
    out.add_term(Monomial(std::move(factors)), c);
  }
  return out;
}

FreePolynomial shift(const Word& x, const FreePolynomial& p) {
  if (x.empty()) return p;
  FreePolynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<FreeMonomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) {
      factors.emplace_back(Indeterminate{v.kind, concat(x, v.word), v.state}, e);
    }
    out.add_term(FreeMonomial(std::move(factors)), c);
  }
  return out;
}

FreePolynomial prefix_substitute(std::span<const Word> antichain, const StateImage& image,
                                 EpsPolicy policy, const FreePolynomial& p) {
  if (!is_antichain(antichain)) throw std::invalid_argument("prefixes do not form an antichain");
  const std::set<Word> prefixes(antichain.begin(), antichain.end());
  std::map<StateId, FreePolynomial> base_images;

  auto has_prefix_in_b = [&](const Word& w) {
    for (std::size_t len = 0; len <= w.size(); ++len) {
      if (prefixes.count(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)))) {
        return true;
      }
    }
    return false;
  };

  return substitute<Indeterminate, Indeterminate>(
      p, [&](const Indeterminate& v) -> std::optional<FreePolynomial> {
        if (v.is_eps()) {
          if (policy == EpsPolicy::ApplyOnes) return FreePolynomial(1);
          return std::nullopt;
        }
        if (!has_prefix_in_b(v.word)) return std::nullopt;
        auto it = base_images.find(v.state);
        if (it == base_images.end()) it = base_images.emplace(v.state, image(v.state)).first;
        // x.(w'.g(s)) = (x w').g(s) for a morphism of the prefix action.
        return shift(v.word, it->second);
      });
}

FreeMonomial profile_monomial(const Profile& profile) {
  std::vector<FreeMonomial::Factor> factors;
  for (const auto& [w, k] : profile) factors.emplace_back(Indeterminate::eps_at(w), k);
  return FreeMonomial(std::move(factors));
}

Profile monomial_profile(const FreeMonomial& m) {
  Profile out;
  for (const auto& [v, e] : m.factors()) {
    if (!v.is_eps()) throw std::invalid_argument("monomial has a state indeterminate");
    out[v.word] += e;
  }
  return out;
}

bool ProfileOrder::operator()(const Profile& a, const Profile& b) const {
  if (a.empty() != b.empty()) return b.empty();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return ShortLex{}(x.first, y.first);
                                        return x.second < y.second;
                                      });
}

}  // namespace pkaeq
