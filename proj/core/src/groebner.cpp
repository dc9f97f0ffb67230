#include "pkaeq/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pkaeq {

namespace {

struct Descending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.less(b, a); }
};

struct Lead {
  Monomial monomial;
  Rational coefficient;
};

Lead lead_of(const Polynomial& p, MonomialOrder order) {
  auto [m, c] = leading_term(p, order);
  return {std::move(m), std::move(c)};
}

}  // namespace

Polynomial make_monic(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) return p;
  const Rational lc = leading_term(p, order).second;
  if (lc == 1) return p;
  return Rational(1 / lc) * p;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors, MonomialOrder order) {
  std::vector<const Polynomial*> gs;
  std::vector<Lead> leads;
  for (const auto& g : divisors) {
    if (g.is_zero()) continue;
    gs.push_back(&g);
    leads.push_back(lead_of(g, order));
  }

  std::map<Monomial, Rational, Descending> work(p.terms().begin(), p.terms().end(),
                                                Descending{order});
  Polynomial remainder;
  while (!work.empty()) {
    auto top = work.begin();
    std::size_t k = 0;
    while (k < gs.size() && !leads[k].monomial.divides(top->first)) ++k;
    if (k == gs.size()) {
      remainder.add_term(top->first, top->second);
      work.erase(top);
      continue;
    }
    const Monomial shift = top->first.quotient(leads[k].monomial);
    const Rational factor = top->second / leads[k].coefficient;
    for (const auto& [m, c] : gs[k]->terms()) {
      auto [it, inserted] = work.try_emplace(m * shift, -factor * c);
      if (!inserted) {
        it->second -= factor * c;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("s-polynomial of zero");
  const Lead lf = lead_of(f, order);
  const Lead lg = lead_of(g, order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times_term(l.quotient(lf.monomial), Rational(1 / lf.coefficient)) -
         g.times_term(l.quotient(lg.monomial), Rational(1 / lg.coefficient));
}

GroebnerBasis make_reduced_basis(std::vector<Polynomial> basis, MonomialOrder order) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Lead> leads;
  for (const auto& g : basis) leads.push_back(lead_of(g, order));
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (leads[j].monomial.divides(leads[i].monomial)) {
        // Equal leading monomials: keep the earlier one.
        if (!(leads[i].monomial == leads[j].monomial) || j < i) keep[i] = false;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(std::move(basis[i]));
  }

  // Inter-reduce the tails. Leading monomials are unchanged by this.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = make_monic(reduce(minimal[i], others, order), order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_term(b, order).first, leading_term(a, order).first);
  });

  GroebnerBasis result(order);
  result.elements_ = std::move(minimal);
  return result;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order,
                         BuchbergerOptions options) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    Polynomial h = make_monic(reduce(f, basis, order), order);
    if (h.is_zero()) continue;
    leads.push_back(leading_term(h, order).first);
    basis.push_back(std::move(h));
  }

  struct Pair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending_index;

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(leads[i], leads[j])) continue;  // product criterion
      pending.insert(Pair{lcm(leads[i], leads[j]), i, j});
      pending_index.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_index.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_index.erase({pr.i, pr.j});

    if (options.chain_criterion) {
      bool redundant = false;
      for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
        if (k == pr.i || k == pr.j) continue;
        redundant = leads[k].divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k);
      }
      if (redundant) continue;
    }

    Polynomial h = reduce(s_polynomial(basis[pr.i], basis[pr.j], order), basis, order);
    if (h.is_zero()) continue;
    h = make_monic(h, order);
    leads.push_back(leading_term(h, order).first);
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
  }
  return make_reduced_basis(std::move(basis), order);
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const {
  return pkaeq::reduce(p, elements_, order_);
}

bool GroebnerBasis::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

}  // namespace pkaeq
