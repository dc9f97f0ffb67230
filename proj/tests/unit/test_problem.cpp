#include "doctest.h"

#include "pkaeq/errors.hpp"
#include "pkaeq/problem.hpp"
#include "support/generators.hpp"

using namespace pkaeq;
using pkaeq::testing::Rng;

namespace {

constexpr Letter a = 0, b = 1;

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  const Problem p = parse_problem(
      "alphabet a b\n"
      "state s\nstate t\n"
      "trans s = 1/2 eps + 1/2 a.s\n"
      "trans t = 1/4 eps^2 (a.s)(b.t) + 3/4\n"
      "left 1 { s s t t t }\n"
      "right 1 { t }\n");
  const Automaton& aut = p.automaton;
  CHECK(aut.alphabet() == std::vector<std::string>{"a", "b"});
  CHECK(aut.states() == std::vector<std::string>{"s", "t"});
  CHECK(aut.theta(0) == q(1, 2) * eps_var() + q(1, 2) * state_var({a}, 0));
  CHECK(aut.theta(1) == q(1, 4) * eps_var().pow(2) * state_var({a}, 0) * state_var({b}, 1) + q(3, 4));
  REQUIRE(p.left.terms.size() == 1);
  CHECK(p.left.terms[0].weight == 1);
  CHECK(seed_polynomial(p.left, 2) ==
        Polynomial::variable(VarId{0}, 2) * Polynomial::variable(VarId{1}, 3));
  CHECK(p.right.terms[0].states == std::vector<StateId>{1});
}

TEST_CASE("grammar details") {
  const Problem p = parse_problem(
      "# comment line\n"
      "alphabet a   # trailing comment\n"
      "state s'\n"
      "state q_1\n"
      "trans s' = eps - 1/3 a.q_1 + 1/3 (a.q_1)^2 + 1/3 a.s'\n"
      "left 1/2 { }\n"
      "left 1/2 { s' }\n"
      "right -1 { q_1 }\n"
      "right 2 { q_1 }\n");
  CHECK(p.automaton.theta(1).is_zero());
  CHECK(p.automaton.theta(0) == eps_var() - q(1, 3) * state_var({a}, 1) +
                                    q(1, 3) * state_var({a}, 1).pow(2) + q(1, 3) * state_var({a}, 0));
  CHECK(p.left.terms.size() == 2);
  CHECK(p.left.terms[0].states.empty());
  CHECK(p.right.terms[0].weight == -1);
  CHECK(seed(p.left, p.right, 2) == q(1, 2) + q(1, 2) * Polynomial::variable(VarId{0}) -
                                        Polynomial::variable(VarId{1}));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_line("alphabet a\nstate s\ntrans s = 1/2 eps + 1/2 a.q\n") == 3);
  CHECK(error_line("alphabet a\nstate s\nstate s\n") == 3);
  CHECK(error_line("alphabet ab\n") == 1);
  CHECK(error_line("alphabet a\nstate eps\n") == 2);
  CHECK(error_line("alphabet a\nstate s\ntrans s = 1\ntrans s = 1\n") == 4);
  CHECK(error_line("alphabet a\nstate s\nleft 1 { s \n") == 3);
  CHECK(error_line("alphabet a\nstate s\ntrans s = 1/0 eps\n") == 3);
  CHECK(error_line("alphabet a\nstate s\ntrans s = b.s\n") == 3);
  CHECK(error_line("alphabet a\nstate s\nfrobnicate\n") == 3);
  CHECK(error_line("alphabet a\nalphabet a\n") == 2);
  CHECK(error_line("alphabet a\nstate s\ntrans s = eps - \n") == 3);
  try {
    parse_problem("alphabet a\nstate s\ntrans s = 1/2 eps + 1/2 a.q\n");
  } catch (const ParseError& e) {
    CHECK(e.column() == 27);
    CHECK(std::string(e.what()) == "line 3, column 27: undeclared state 'q'");
  }
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.pka"), InputError);
}

TEST_CASE("format_theta") {
  const Automaton aut({"a", "b"}, {"s", "t"}, {FreePolynomial(0), FreePolynomial(0)});
  CHECK(format_theta(aut, q(1, 2) * eps_var() + q(1, 2) * state_var({a}, 0)) == "1/2 eps + 1/2 a.s");
  CHECK(format_theta(aut, FreePolynomial{}) == "0");
  CHECK(format_theta(aut, FreePolynomial(1)) == "1");
  CHECK(format_theta(aut, -state_var({b}, 1).pow(2)) == "-b.t^2");
  CHECK(format_theta(aut, eps_var() - q(1, 2) * state_var({a}, 0)) == "eps - 1/2 a.s");
  CHECK(format_theta(aut, Rational(-3) + eps_var()) == "-3 + eps");
}

TEST_CASE("print and parse round trip") {
  Rng rng(71);
  const testing::AutomatonShape shape;
  for (int i = 0; i < 200; ++i) {
    Problem p;
    const int n = testing::uniform(rng, 1, 3);
    p.automaton = testing::random_automaton(rng, shape, n);
    p.left = testing::random_measure(rng, static_cast<StateId>(n));
    p.right = testing::random_measure(rng, static_cast<StateId>(n));
    // signed weights and structure maps print too
    if (i % 3 == 0) p.right.terms[0].weight = -p.right.terms[0].weight;
    const std::string text = print_problem(p);
    const Problem back = parse_problem(text);
    CHECK(back == p);
    CHECK(print_problem(back) == text);
  }
  Problem zero;
  zero.automaton = Automaton({"a"}, {"s"}, {FreePolynomial{}});
  CHECK(parse_problem(print_problem(zero)) == zero);
}
