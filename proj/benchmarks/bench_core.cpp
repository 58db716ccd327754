#include <benchmark/benchmark.h>

#include "runslab/enumeration.hpp"
#include "runslab/group_action.hpp"
#include "runslab/permutation.hpp"

namespace {

using namespace runslab;

void BM_RunCount(benchmark::State& state) {
  const Permutation p = nth_permutation(static_cast<int>(state.range(0)), 12345 % factorial(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_count(p));
  }
}
BENCHMARK(BM_RunCount)->Arg(8)->Arg(12)->Arg(20);

void BM_ApplyC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Permutation p = nth_permutation(n, factorial(n) / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_c(3, p));
  }
}
BENCHMARK(BM_ApplyC)->Arg(8)->Arg(12)->Arg(20);

void BM_IsMinimal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratorSet gens(n);
  const Permutation p = nth_permutation(n, factorial(n) / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::is_minimal(p.data(), p.size(), gens));
  }
}
BENCHMARK(BM_IsMinimal)->Arg(8)->Arg(12)->Arg(20);

void BM_OrbitOf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Permutation p = nth_permutation(n, factorial(n) / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_of(p));
  }
}
BENCHMARK(BM_OrbitOf)->Arg(6)->Arg(10)->Arg(14);

void BM_BruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distribution_bruteforce(n, {workers, false}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_BruteForce)->Args({8, 1})->Args({9, 1})->Args({9, 2})->Args({10, 2})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OrbitMethod(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distribution_via_orbits(n, {workers, false}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_OrbitMethod)->Args({8, 1})->Args({9, 1})->Args({9, 2})->Args({10, 2})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
