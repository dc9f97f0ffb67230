#include "doctest.h"

#include <numeric>

#include "pkaeq/algebra.hpp"
#include "pkaeq/decide.hpp"
#include "pkaeq/errors.hpp"
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

FreePolynomial geo_theta(StateId next) {
  return q(1, 2) * eps_var() + q(1, 2) * state_var({a}, next);
}

Automaton cycle_and_geometric() {
  return Automaton({"a"}, {"s", "t", "u"}, {geo_theta(1), geo_theta(0), geo_theta(2)});
}

Automaton eps_and_eps2() {
  return Automaton({"a"}, {"s", "u"},
                   {geo_theta(0), q(1, 2) * eps_var().pow(2) + q(1, 2) * state_var({a}, 1)});
}

// Permutes the states of a case: new id of old state s is perm[s].
testing::CorpusCase permuted(const testing::CorpusCase& c, const std::vector<StateId>& perm) {
  const auto n = c.automaton.num_states();
  std::vector<std::string> names(n);
  std::vector<FreePolynomial> theta(n);
  auto move_state = [&](const Indeterminate& v) -> std::optional<FreePolynomial> {
    if (v.is_eps()) return std::nullopt;
    return state_var(v.word, perm[v.state]);
  };
  for (StateId s = 0; s < n; ++s) {
    names[perm[s]] = c.automaton.states()[s];
    theta[perm[s]] = substitute<Indeterminate, Indeterminate>(c.automaton.theta(s), move_state);
  }
  std::map<VarId, Polynomial> sigma;
  for (StateId s = 0; s < n; ++s) sigma[VarId{s}] = Polynomial::variable(VarId{perm[s]});
  return {c.kind, Automaton(c.automaton.alphabet(), names, theta), substitute(c.left, sigma),
          substitute(c.right, sigma)};
}

}  // namespace

TEST_CASE("zero seed is equivalent at stage zero") {
  const auto v = decide(cycle_and_geometric(), Polynomial{});
  REQUIRE(is_equivalent(v));
  const auto& eq = std::get<Equivalent>(v);
  CHECK(eq.stages == 0);
  CHECK(eq.basis.empty());
  CHECK(eq.basis_size == 0);
  CHECK(is_equivalent(decide(cycle_and_geometric(), s0, s0)));
}

TEST_CASE("two-state cycle against the geometric state") {
  std::vector<StageTrace> traces;
  DecideConfig cfg;
  cfg.check_invariants = true;
  cfg.on_stage = [&](const StageTrace& t) { traces.push_back(t); };
  const auto v = decide(cycle_and_geometric(), s0, s2, cfg);
  REQUIRE(is_equivalent(v));
  const auto& eq = std::get<Equivalent>(v);
  CHECK(eq.stages == 2);
  CHECK(eq.generators == 2);
  CHECK(eq.basis.elements() == std::vector<Polynomial>{s0 - s2, s1 - s2});

  REQUIRE(traces.size() == 2);
  CHECK(traces[0].stage == 1);
  CHECK(traces[0].expanded == 1);
  CHECK(traces[0].adopted == 1);
  CHECK(traces[0].basis_size == 2);
  CHECK(traces[1].expanded == 1);
  CHECK(traces[1].adopted == 0);
}

TEST_CASE("eps against eps squared") {
  const auto v = decide(eps_and_eps2(), s0, s1);
  REQUIRE_FALSE(is_equivalent(v));
  const auto& ne = std::get<NotEquivalent>(v);
  CHECK(ne.stages == 1);
  CHECK(ne.failing_polynomial == Polynomial(q(1, 2)));
  CHECK(ne.derivation_path == std::vector<DerivationStep>{{a, 1}});
  REQUIRE(ne.witness.has_value());
  CHECK(ne.witness->depth == 1);
  CHECK(ne.witness->profile == Profile{{Word{}, 1}});
  CHECK(ne.witness->left == q(1, 2));
  CHECK(ne.witness->right == 0);

  DecideConfig quiet;
  quiet.find_witness = false;
  CHECK_FALSE(std::get<NotEquivalent>(decide(eps_and_eps2(), s0, s1, quiet)).witness.has_value());
}

TEST_CASE("unequal total mass fails at stage zero") {
  DecideConfig relaxed;
  relaxed.strict_validation = false;
  const auto v = decide(cycle_and_geometric(), s0, q(1, 2) * s2, relaxed);
  REQUIRE_FALSE(is_equivalent(v));
  const auto& ne = std::get<NotEquivalent>(v);
  CHECK(ne.stages == 0);
  CHECK(ne.derivation_path.empty());
  CHECK(ne.failing_polynomial == s0 - q(1, 2) * s2);
  REQUIRE(ne.witness.has_value());
  CHECK(ne.witness->depth == 1);
}

TEST_CASE("input and resource errors") {
  const Automaton heavy({"a"}, {"s"}, {q(3, 4) * eps_var() + q(1, 2) * state_var({a}, 0)});
  CHECK_THROWS_AS(decide(heavy, s0, s0), InputError);
  DecideConfig relaxed;
  relaxed.strict_validation = false;
  CHECK_NOTHROW(decide(heavy, s0, s0, relaxed));

  CHECK_THROWS_AS(decide(cycle_and_geometric(), Polynomial::variable(VarId{7})), InputError);

  DecideConfig tight;
  tight.max_stages = 1;
  CHECK_THROWS_AS(decide(cycle_and_geometric(), s0, s2, tight), ResourceError);
  tight.max_stages = 2;
  CHECK(is_equivalent(decide(cycle_and_geometric(), s0, s2, tight)));
  tight.max_stages = 0;
  CHECK_THROWS_AS(decide(cycle_and_geometric(), s0, s2, tight), InputError);
}

TEST_CASE("reflexivity") {
  Rng rng(61);
  const testing::AutomatonShape shape;
  for (int i = 0; i < 50; ++i) {
    const Automaton aut = testing::random_automaton(rng, shape, testing::uniform(rng, 1, 3));
    const MeasureSeed mu = testing::random_measure(rng, static_cast<StateId>(aut.num_states()));
    CHECK(is_equivalent(decide(aut, seed(mu, mu, aut.num_states()))));
    const Polynomial p = seed_polynomial(mu, aut.num_states());
    CHECK(is_equivalent(decide(aut, p, p)));
  }
}

TEST_CASE("verdicts survive renaming and scaling") {
  Rng rng(62);
  const testing::AutomatonShape shape;
  for (int i = 0; i < 60; ++i) {
    const auto c = testing::random_case(rng, shape, i);
    const bool verdict = is_equivalent(decide(c.automaton, c.left, c.right));

    std::vector<StateId> perm(c.automaton.num_states());
    std::iota(perm.begin(), perm.end(), StateId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = permuted(c, perm);
    CHECK(is_equivalent(decide(r.automaton, r.left, r.right)) == verdict);

    DecideConfig relaxed;
    relaxed.strict_validation = true;
    const Rational k = testing::small_rational(rng, false);
    CHECK(is_equivalent(decide(c.automaton, k * (c.left - c.right))) == verdict);
    CHECK(is_equivalent(decide(c.automaton, c.left - c.right, Polynomial{}, {.order = MonomialOrder::lex()})) ==
          verdict);
  }
}

TEST_CASE("final generators are closed under derivatives") {
  Rng rng(63);
  const testing::AutomatonShape shape;
  int equivalent = 0;
  for (int i = 0; i < 80; ++i) {
    const auto c = testing::random_case(rng, shape, i);
    const auto v = decide(c.automaton, c.left, c.right);
    if (!is_equivalent(v)) continue;
    ++equivalent;
    const auto& eq = std::get<Equivalent>(v);
    CHECK(eq.generator_set.size() == eq.generators);
    for (const auto& g : eq.generator_set) {
      CHECK(coeff_sum(g) == 0);
      CHECK(eq.basis.contains(g));
      for (Letter l = 0; l < c.automaton.alphabet_size(); ++l) {
        for (const auto& [n, d] : derivative(c.automaton, g, l)) CHECK(eq.basis.contains(d));
      }
    }
    CHECK(eq.basis.contains(c.left - c.right));
  }
  CHECK(equivalent > 10);
}

TEST_CASE("stages grow the ideal strictly") {
  Rng rng(64);
  const testing::AutomatonShape shape;
  for (int i = 0; i < 80; ++i) {
    const auto c = testing::random_case(rng, shape, i);
    DecideConfig cfg;
    cfg.check_invariants = true;
    std::vector<StageTrace> traces;
    cfg.on_stage = [&](const StageTrace& t) { traces.push_back(t); };
    CHECK_NOTHROW(decide(c.automaton, c.left, c.right, cfg));
    for (std::size_t k = 0; k + 1 < traces.size(); ++k) {
      CHECK(traces[k].stage == k + 1);
      CHECK(traces[k].adopted > 0);
    }
  }
}
