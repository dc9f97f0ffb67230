#include "doctest.h"

#include "pkaeq/algebra.hpp"
#include "pkaeq/oracle.hpp"
#include "support/generators.hpp"

using namespace pkaeq;
using pkaeq::testing::Rng;

namespace {

constexpr Letter a = 0;

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const Polynomial s0 = Polynomial::variable(VarId{0});
const Polynomial s1 = Polynomial::variable(VarId{1});
const Polynomial s2 = Polynomial::variable(VarId{2});

FreePolynomial geo_theta(StateId next, const Rational& p = q(1, 2)) {
  return p * eps_var() + Rational(1 - p) * state_var({a}, next);
}

Profile profile(std::initializer_list<std::pair<const Word, std::uint32_t>> entries) {
  return Profile(entries);
}

// s <-> t cycle and one-state geometric u
Automaton cycle_and_geometric() {
  return Automaton({"a"}, {"s", "t", "u"}, {geo_theta(1), geo_theta(0), geo_theta(2)});
}

Automaton eps_and_eps2() {
  return Automaton({"a"}, {"s", "u"},
                   {geo_theta(0), q(1, 2) * eps_var().pow(2) + q(1, 2) * state_var({a}, 1)});
}

// depth-n semantics summed over extensions onto the smaller tree
TruncatedSemantics project(const TruncatedSemantics& sem, const FiniteTree& onto) {
  TruncatedSemantics out{onto, {}};
  for (const auto& [beta, value] : sem.values) {
    Profile restricted;
    for (const auto& [w, n] : beta) {
      if (onto.contains(w)) restricted[w] = n;
    }
    out.values[restricted] += value;
  }
  std::erase_if(out.values, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("truncated semantics examples") {
  const Automaton accept({"a"}, {"s"}, {eps_var()});
  const auto one = truncated_semantics(accept, s0, 1);
  CHECK(one.values.size() == 1);
  CHECK(one[profile({{Word{}, 1}})] == 1);

  const Automaton geo({"a"}, {"s"}, {geo_theta(0)});
  const auto two = truncated_semantics(geo, s0, 2);
  CHECK(two.tree == FiniteTree::full(1, 2));
  CHECK(two.values.size() == 3);
  CHECK(two[profile({{Word{}, 1}})] == q(1, 2));
  CHECK(two[profile({{Word{a}, 1}})] == q(1, 4));
  CHECK(two[Profile{}] == q(1, 4));
  CHECK(two.total() == 1);

  // reporting order: nonempty profiles first
  auto it = two.values.begin();
  CHECK(it->first == profile({{Word{}, 1}}));
  CHECK(std::prev(two.values.end())->first == Profile{});

  const auto empty = truncated_semantics(geo, s0, FiniteTree{});
  CHECK(empty.values.size() == 1);
  CHECK(empty[Profile{}] == 1);
}

TEST_CASE("semantics of a signed seed") {
  const Automaton geo({"a"}, {"s"}, {geo_theta(0)});
  const auto sem = truncated_semantics(geo, 2 * s0.pow(2) - 1, 1);
  CHECK(sem.total() == 1);
  CHECK(sem[profile({{Word{}, 2}})] == q(1, 2));
  CHECK(sem[profile({{Word{}, 1}})] == 1);
  CHECK(sem[Profile{}] == q(-1, 2));
}

TEST_CASE("equivalent_to_depth examples") {
  const Automaton ce = cycle_and_geometric();
  for (std::size_t n = 1; n <= 5; ++n) CHECK(equivalent_to_depth(ce, s0 + s1, s1 + s0, n));
  CHECK(equivalent_to_depth(ce, s0, s2, 4));
  CHECK(truncated_semantics(ce, s0, 6) == truncated_semantics(ce, s2, 6));

  const Automaton ee = eps_and_eps2();
  CHECK_FALSE(equivalent_to_depth(ee, s0, s1, 1));
  const auto left = truncated_semantics(ee, s0, 1);
  const auto right = truncated_semantics(ee, s1, 1);
  CHECK(left[profile({{Word{}, 1}})] == q(1, 2));
  CHECK(right[profile({{Word{}, 2}})] == q(1, 2));
}

TEST_CASE("find_witness examples") {
  CHECK_FALSE(find_witness(cycle_and_geometric(), s0, s2, 5).has_value());

  const auto w = find_witness(eps_and_eps2(), s0, s1, 4);
  REQUIRE(w.has_value());
  CHECK(*w == Witness{1, profile({{Word{}, 1}}), q(1, 2), 0});

  const Automaton third({"a"}, {"s", "u"}, {geo_theta(0), geo_theta(1, q(1, 3))});
  const auto v = find_witness(third, s0, s1, 2);
  REQUIRE(v.has_value());
  CHECK(*v == Witness{1, profile({{Word{}, 1}}), q(1, 2), q(1, 3)});
}

TEST_CASE("witness needs depth when the first levels agree") {
  // s and u accept eps with probability 1/2, then differ after one a
  const Automaton aut({"a"}, {"s", "u", "x", "y"},
                      {geo_theta(2), geo_theta(3), eps_var(), eps_var().pow(2)});
  CHECK(equivalent_to_depth(aut, s0, s1, 1));
  const auto w = find_witness(aut, s0, s1, 8);
  REQUIRE(w.has_value());
  CHECK(w->depth == 2);
  CHECK(w->profile == profile({{Word{a}, 1}}));
  CHECK(w->left == q(1, 2));
  CHECK(w->right == 0);
  CHECK_FALSE(find_witness(aut, s0, s1, 1).has_value());
}

TEST_CASE("oracle agrees with the graded components") {
  Rng rng(51);
  testing::AutomatonShape shape;
  for (int i = 0; i < 40; ++i) {
    const Automaton aut = testing::random_automaton(rng, shape, testing::uniform(rng, 1, 3));
    const Polynomial p = testing::random_polynomial(rng, static_cast<std::uint32_t>(aut.num_states()), 2, 1);
    for (std::size_t depth = 0; depth <= 3; ++depth) {
      const FiniteTree tree = FiniteTree::full(2, depth);
      const auto sem = truncated_semantics(aut, p, tree);
      std::map<Profile, Rational, ProfileOrder> expected;
      for (const auto& [beta, d] : d_components(aut, tree, p)) {
        if (Rational v = one_eval(d); v != 0) expected[beta] = v;
      }
      CHECK(sem.values == expected);
    }
  }
}

TEST_CASE("normalization and depth consistency") {
  Rng rng(52);
  testing::AutomatonShape shape;
  for (int i = 0; i < 40; ++i) {
    const Automaton aut = testing::random_automaton(rng, shape, testing::uniform(rng, 1, 3));
    const Polynomial p = seed_polynomial(testing::random_measure(rng, static_cast<StateId>(aut.num_states())),
                                         aut.num_states());
    TruncatedSemantics previous = truncated_semantics(aut, p, 0);
    for (std::size_t depth = 1; depth <= 4; ++depth) {
      const auto sem = truncated_semantics(aut, p, depth);
      CHECK(sem.total() == 1);
      for (const auto& [beta, v] : sem.values) CHECK(v > 0);
      CHECK(project(sem, previous.tree) == previous);
      previous = sem;
    }
  }
}

TEST_CASE("refutation is monotone in depth") {
  Rng rng(53);
  testing::AutomatonShape shape;
  shape.alphabet = 1;
  for (int i = 0; i < 40; ++i) {
    const auto c = testing::random_case(rng, shape, i);
    bool refuted = false;
    for (std::size_t depth = 1; depth <= 4; ++depth) {
      const bool eq = equivalent_to_depth(c.automaton, c.left, c.right, depth);
      if (refuted) CHECK_FALSE(eq);
      refuted = refuted || !eq;
    }
  }
}

TEST_CASE("merged-state comparison agrees with full expansion") {
  Rng rng(54);
  testing::AutomatonShape shape;
  shape.alphabet = 1;
  int equal = 0;
  for (int i = 0; i < 40; ++i) {
    const auto c = testing::random_case(rng, shape, i);
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      const bool expanded = truncated_semantics(c.automaton, c.left, depth) ==
                            truncated_semantics(c.automaton, c.right, depth);
      CHECK(equivalent_to_depth(c.automaton, c.left, c.right, depth) == expanded);
      equal += expanded ? 1 : 0;
    }
  }
  CHECK(equal > 0);
}
