#include <benchmark/benchmark.h>

#include "pkaeq/decide.hpp"
#include "pkaeq/groebner.hpp"
#include "pkaeq/oracle.hpp"
#include "support/generators.hpp"

using namespace pkaeq;

namespace {

Polynomial x(std::uint32_t i) { return Polynomial::variable(VarId{i}); }

void BM_BuchbergerCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Polynomial> gens;
  for (int d = 1; d < n; ++d) {
    Polynomial sum;
    for (int i = 0; i < n; ++i) {
      Polynomial term = 1;
      for (int j = 0; j < d; ++j) term = term * x(static_cast<std::uint32_t>((i + j) % n));
      sum += term;
    }
    gens.push_back(sum);
  }
  Polynomial prod = 1;
  for (int i = 0; i < n; ++i) prod = prod * x(static_cast<std::uint32_t>(i));
  gens.push_back(prod - 1);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerCyclic)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// chain of n states each accepting or moving one step on with probability 1/2
Automaton chain(std::uint32_t n) {
  std::vector<std::string> states;
  std::vector<FreePolynomial> theta;
  for (std::uint32_t i = 0; i < n; ++i) {
    states.push_back("q" + std::to_string(i));
    Rational half(1, 2);
    theta.push_back(half * eps_var() + half * state_var({0}, (i + 1) % n));
  }
  return Automaton({"a"}, states, theta);
}

void BM_DecideChain(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Automaton aut = chain(n);
  for (auto _ : state) benchmark::DoNotOptimize(decide(aut, x(0), x(n - 1)));
}
BENCHMARK(BM_DecideChain)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DecideCorpus(benchmark::State& state) {
  testing::Rng rng(7);
  const testing::AutomatonShape shape;
  std::vector<testing::CorpusCase> cases;
  for (int i = 0; i < 16; ++i) cases.push_back(testing::random_case(rng, shape, i));
  for (auto _ : state) {
    for (const auto& c : cases) benchmark::DoNotOptimize(decide(c.automaton, c.left, c.right));
  }
}
BENCHMARK(BM_DecideCorpus)->Unit(benchmark::kMillisecond);

void BM_TruncatedSemantics(benchmark::State& state) {
  const Automaton aut = chain(3);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_semantics(aut, x(0) * x(1), depth));
}
BENCHMARK(BM_TruncatedSemantics)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
