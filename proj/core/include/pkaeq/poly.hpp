#pragma once

// Exact sparse multivariate polynomials over Q.
//
// BasicPolynomial<Var> works for any totally ordered indeterminate type. The
// commutative ring Q[S] uses VarId (a state index); the free algebra over
// Sigma*.eps and Sigma*.S uses Indeterminate (see free_algebra.hpp).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pkaeq/rational.hpp"

namespace pkaeq {

/// Registry index of an indeterminate of Q[S]. Smaller index = larger
/// variable in the monomial orders (x0 > x1 > ...).
struct VarId {
  std::uint32_t index = 0;
  auto operator<=>(const VarId&) const = default;
};

template <class Var>
class BasicMonomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  BasicMonomial() = default;

  /// Normalizes: sorts by variable, merges repeats, drops zero exponents.
  explicit BasicMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> merged;
    merged.reserve(factors_.size());
    for (auto& f : factors_) {
      if (f.second == 0) continue;
      if (!merged.empty() && merged.back().first == f.first) {
        merged.back().second += f.second;
      } else {
        merged.push_back(std::move(f));
      }
    }
    factors_ = std::move(merged);
  }

  static BasicMonomial variable(Var v, std::uint32_t exponent = 1) {
    BasicMonomial m;
    if (exponent > 0) m.factors_.emplace_back(std::move(v), exponent);
    return m;
  }

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  std::uint32_t degree(const Var& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Var& x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  friend BasicMonomial operator*(const BasicMonomial& a, const BasicMonomial& b) {
    BasicMonomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first < j->first) {
        r.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
  }

  /// True iff this monomial divides `other`.
  bool divides(const BasicMonomial& other) const {
    auto j = other.factors_.begin();
    for (const auto& f : factors_) {
      while (j != other.factors_.end() && j->first < f.first) ++j;
      if (j == other.factors_.end() || !(j->first == f.first) || j->second < f.second) {
        return false;
      }
    }
    return true;
  }

  /// this / divisor. Precondition: divisor.divides(*this).
  BasicMonomial quotient(const BasicMonomial& divisor) const {
    BasicMonomial r;
    auto j = divisor.factors_.begin();
    for (const auto& f : factors_) {
      std::uint32_t e = f.second;
      if (j != divisor.factors_.end() && j->first == f.first) {
        e -= j->second;
        ++j;
      }
      if (e > 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
  }

  friend BasicMonomial lcm(const BasicMonomial& a, const BasicMonomial& b) {
    BasicMonomial r;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first < j->first) {
        r.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, std::max(i->second, j->second));
        ++i;
        ++j;
      }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
  }

  /// No shared variable.
  friend bool coprime(const BasicMonomial& a, const BasicMonomial& b) {
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first < j->first) {
        ++i;
      } else if (j->first < i->first) {
        ++j;
      } else {
        return false;
      }
    }
    return true;
  }

  // Structural order, used only for canonical storage.
  friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;
  friend bool operator<(const BasicMonomial& a, const BasicMonomial& b) {
    return std::lexicographical_compare(
        a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
        [](const Factor& x, const Factor& y) {
          if (x.first < y.first) return true;
          if (y.first < x.first) return false;
          return x.second < y.second;
        });
  }

 private:
  std::vector<Factor> factors_;
};

template <class Var>
class BasicPolynomial {
 public:
  using Monomial = BasicMonomial<Var>;
  using TermMap = std::map<Monomial, Rational>;

  BasicPolynomial() = default;
  BasicPolynomial(const Rational& c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  BasicPolynomial(int c) : BasicPolynomial(Rational(c)) {}  // NOLINT
  BasicPolynomial(Monomial m, const Rational& c = 1) {
    if (c != 0) terms_.emplace(std::move(m), c);
  }

  static BasicPolynomial variable(Var v, std::uint32_t exponent = 1) {
    return BasicPolynomial(Monomial::variable(std::move(v), exponent));
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c*m in place, keeping the canonical form.
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPolynomial& operator+=(const BasicPolynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial p, const BasicPolynomial& q) {
    p += q;
    return p;
  }
  friend BasicPolynomial operator-(BasicPolynomial p, const BasicPolynomial& q) {
    p -= q;
    return p;
  }
  friend BasicPolynomial operator-(BasicPolynomial p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& p, const BasicPolynomial& q) {
    BasicPolynomial r;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    }
    return r;
  }
  friend BasicPolynomial operator*(const Rational& c, BasicPolynomial p) {
    if (c == 0) return {};
    for (auto& [m, coeff] : p.terms_) coeff *= c;
    return p;
  }
  friend BasicPolynomial operator*(int c, BasicPolynomial p) { return Rational(c) * std::move(p); }

  /// c * m * p for a single term.
  BasicPolynomial times_term(const Monomial& m, const Rational& c) const {
    BasicPolynomial r;
    if (c == 0) return r;
    for (const auto& [mp, cp] : terms_) r.terms_.emplace(mp * m, cp * c);
    return r;
  }

  BasicPolynomial pow(std::uint32_t e) const {
    BasicPolynomial result(1);
    BasicPolynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

using Monomial = BasicMonomial<VarId>;
using Polynomial = BasicPolynomial<VarId>;

/// Replaces mapped variables by polynomials; unmapped variables stay put.
/// `image` returns nullopt for a variable it leaves fixed.
template <class Var, class Target = Var>
BasicPolynomial<Target> substitute(
    const BasicPolynomial<Var>& p,
    const std::function<std::optional<BasicPolynomial<Target>>(const Var&)>& image,
    const std::function<Target(const Var&)>& keep = nullptr) {
  using TargetPoly = BasicPolynomial<Target>;
  using TargetMono = BasicMonomial<Target>;
  std::map<Var, std::optional<TargetPoly>> images;
  std::map<std::pair<Var, std::uint32_t>, TargetPoly> powers;
  TargetPoly result;
  for (const auto& [m, c] : p.terms()) {
    std::vector<typename TargetMono::Factor> fixed;
    TargetPoly term(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) it = images.emplace(v, image(v)).first;
      if (!it->second) {
        if constexpr (std::is_same_v<Var, Target>) {
          fixed.emplace_back(keep ? keep(v) : v, e);
        } else {
          if (!keep) throw std::invalid_argument("substitute: unmapped variable");
          fixed.emplace_back(keep(v), e);
        }
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pw = powers.find(key);
      if (pw == powers.end()) pw = powers.emplace(key, it->second->pow(e)).first;
      term = term * pw->second;
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    if (!fixed.empty()) term = term * TargetPoly(TargetMono(std::move(fixed)));
    result += term;
  }
  return result;
}

/// Substitution from an explicit partial map.
template <class Var>
BasicPolynomial<Var> substitute(const BasicPolynomial<Var>& p,
                                const std::map<Var, BasicPolynomial<Var>>& sigma) {
  return substitute<Var, Var>(
      p, [&](const Var& v) -> std::optional<BasicPolynomial<Var>> {
        auto it = sigma.find(v);
        if (it == sigma.end()) return std::nullopt;
        return it->second;
      });
}

/// Sum of coefficients: the evaluation of p at (1, ..., 1).
template <class Var>
Rational coeff_sum(const BasicPolynomial<Var>& p) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

/// Splits each monomial into its selected part (the key) and the rest
/// (summed into the value). Reassembles as sum of key * value.
template <class Var>
std::map<BasicMonomial<Var>, BasicPolynomial<Var>> grade_by(
    const BasicPolynomial<Var>& p, const std::function<bool(const Var&)>& selected) {
  using Mono = BasicMonomial<Var>;
  std::map<Mono, BasicPolynomial<Var>> graded;
  for (const auto& [m, c] : p.terms()) {
    std::vector<typename Mono::Factor> key;
    std::vector<typename Mono::Factor> rest;
    for (const auto& f : m.factors()) (selected(f.first) ? key : rest).push_back(f);
    graded[Mono(std::move(key))].add_term(Mono(std::move(rest)), c);
  }
  std::erase_if(graded, [](const auto& kv) { return kv.second.is_zero(); });
  return graded;
}

/// Admissible monomial order over the variable order, where the smallest
/// variable (first declared) is the most significant.
class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Lex };

  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(Kind kind) : kind_(kind) {}

  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex); }

  constexpr Kind kind() const { return kind_; }

  template <class Var>
  std::strong_ordering compare(const BasicMonomial<Var>& a, const BasicMonomial<Var>& b) const {
    const auto fa = a.factors();
    const auto fb = b.factors();
    if (kind_ == Kind::GradedReverseLex) {
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      // Scan from the least significant variable; the first difference
      // decides, and a smaller exponent there means a larger monomial.
      auto i = fa.rbegin();
      auto j = fb.rbegin();
      while (i != fa.rend() && j != fb.rend()) {
        if (j->first < i->first) return std::strong_ordering::less;  // a has it, b does not
        if (i->first < j->first) return std::strong_ordering::greater;
        if (i->second != j->second) {
          return i->second < j->second ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
        }
        ++i;
        ++j;
      }
      // Equal total degree and a common suffix imply equality.
      return std::strong_ordering::equal;
    }
    auto i = fa.begin();
    auto j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
      if (i->first < j->first) return std::strong_ordering::greater;
      if (j->first < i->first) return std::strong_ordering::less;
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    }
    if (i != fa.end()) return std::strong_ordering::greater;
    if (j != fb.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  template <class Var>
  bool less(const BasicMonomial<Var>& a, const BasicMonomial<Var>& b) const {
    return compare(a, b) < 0;
  }

  friend constexpr bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  Kind kind_ = Kind::GradedReverseLex;
};

/// The order-greatest term of p. Throws std::domain_error for p = 0.
template <class Var>
std::pair<BasicMonomial<Var>, Rational> leading_term(const BasicPolynomial<Var>& p,
                                                     MonomialOrder ord = {}) {
  if (p.is_zero()) throw std::domain_error("no leading term");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (ord.less(best->first, it->first)) best = it;
  }
  return *best;
}

/// Human-readable rendering, e.g. "1/2*x0^2 - x1 + 3".
template <class Var>
std::string to_string(const BasicPolynomial<Var>& p,
                      const std::function<std::string(const Var&)>& name,
                      MonomialOrder ord = {}) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BasicMonomial<Var>, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += to_string(mag) + "*" + body;
    }
  }
  return out;
}

/// Default names x0, x1, ... for Q[S].
inline std::string to_string(const Polynomial& p) {
  return to_string<VarId>(p, [](const VarId& v) { return "x" + std::to_string(v.index); });
}

}  // namespace pkaeq
