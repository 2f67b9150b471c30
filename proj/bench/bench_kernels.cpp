// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cantor/factor_oracle.hpp"
#include "cantor/parallel.hpp"

using namespace cantor;

namespace {

const CantorBase& phi2() {
  static const CantorBase b = parse_base("alt: (3+sqrt(5))/2, 3+sqrt(5)");
  return b;
}

std::vector<ExactReal> sample_points(std::size_t count) {
  std::vector<ExactReal> xs;
  for (std::size_t k = 1; k <= count; ++k) {
    const ExactReal v = ExactReal::quadratic(Rational(static_cast<long>(k), 97), Rational(static_cast<long>(k % 13), 31), 5);
    xs.push_back(v - ExactReal(Rational(floor_exact(v))));
  }
  return xs;
}

const std::vector<FiniteWord>& words() {
  static const std::vector<FiniteWord> ws = enumerate_all_words(phi2(), 5);
  return ws;
}

template <auto Kernel>
void greedy(benchmark::State& state) {
  const std::vector<ExactReal> xs = sample_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(phi2(), xs, 32));
}

template <auto Kernel>
void factors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(phi2(), words()));
}

template <auto Kernel>
void accepts(benchmark::State& state) {
  const ShiftAutomaton a = build_lazy_automaton(phi2());
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, words()));
}

}  // namespace

BENCHMARK(greedy<serial::greedy_batch>)->Name("greedy_batch/serial")->Arg(256);
BENCHMARK(greedy<parallel::greedy_batch>)->Name("greedy_batch/openmp")->Arg(256);
BENCHMARK(factors<serial::lazy_factor_flags>)->Name("lazy_factor_flags/serial");
BENCHMARK(factors<parallel::lazy_factor_flags>)->Name("lazy_factor_flags/openmp");
BENCHMARK(accepts<serial::accept_flags>)->Name("accept_flags/serial");
BENCHMARK(accepts<parallel::accept_flags>)->Name("accept_flags/openmp");

BENCHMARK_MAIN();
