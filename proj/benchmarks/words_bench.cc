#include <benchmark/benchmark.h>

#include "quasitone/words/complexity.hpp"
#include "quasitone/words/substitution.hpp"

namespace {

using namespace quasitone::words;

void BM_FibonacciConcatenation(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibonacci_word(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FibonacciConcatenation)->Arg(10000)->Arg(1000000);

void BM_FibonacciSubstitution(benchmark::State& state) {
  auto rule = SubstitutionRule::fibonacci();
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(rule, "0", 40, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FibonacciSubstitution)->Arg(10000)->Arg(1000000);

void BM_Complexity(benchmark::State& state) {
  auto w = fibonacci_word(10000).symbols;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complexity(w, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Complexity)->Arg(1)->Arg(20)->Arg(200);

}  // namespace
