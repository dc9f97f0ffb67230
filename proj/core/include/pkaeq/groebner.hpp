#pragma once

#include <span>
#include <vector>

#include "pkaeq/poly.hpp"

namespace pkaeq {

/// A reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading monomial, sorted by decreasing leading
/// monomial. The empty basis generates the zero ideal.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(MonomialOrder order = {}) : order_(order) {}

  const std::vector<Polynomial>& elements() const { return elements_; }
  MonomialOrder order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// Normal form of p modulo the basis.
  Polynomial reduce(const Polynomial& p) const;

  /// Ideal membership: reduce(p) == 0.
  bool contains(const Polynomial& p) const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  friend GroebnerBasis make_reduced_basis(std::vector<Polynomial>, MonomialOrder);

  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

/// Full multivariate division: the returned r satisfies p - r in <divisors>
/// and no term of r is divisible by a divisor's leading monomial. Zero
/// divisors are ignored.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors,
                  MonomialOrder order = {});

/// (L/lt(f)) f - (L/lt(g)) g with L = lcm of the leading monomials.
/// Throws std::domain_error on a zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order = {});

struct BuchbergerOptions {
  /// Gebauer-Moeller style chain criterion on top of the product criterion.
  bool chain_criterion = false;
};

/// Reduced Groebner basis of the ideal generated by `generators`, with the
/// normal pair-selection strategy (smallest lcm first) and the product
/// criterion.
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order = {},
                         BuchbergerOptions options = {});

inline bool contains(const GroebnerBasis& basis, const Polynomial& p) {
  return basis.contains(p);
}

/// p divided by its leading coefficient (zero stays zero).
Polynomial make_monic(const Polynomial& p, MonomialOrder order = {});

}  // namespace pkaeq
