// Serial exact-rational reference vs the integer kernel, 1 thread and all threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "sgo/grid.hpp"

using namespace sgo;

namespace {

// Dense random integer form; coefficients in [-9, 9].
HomogeneousPolynomial dense_form(std::size_t n, unsigned d) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-9, 9);
  HomogeneousPolynomial f(n, d);
  grid::enumerate_grid({n, d}, [&](const ExponentTuple& a) {
    if (const int c = coef(rng); c != 0) f.add_term(a, c);
  });
  return f;
}

// Args: n, d, r.
void BM_Reference(benchmark::State& state) {
  const auto f = dense_form(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto r = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(grid::grid_minimize_reference(f, r));
  state.counters["points"] = grid::grid_size({f.variables(), r}).get_d();
}

void run_kernel(benchmark::State& state, int threads) {
  const auto f = dense_form(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto r = static_cast<unsigned>(state.range(2));
  grid::GridOptions opts;
  opts.threads = threads;
  for (auto _ : state) benchmark::DoNotOptimize(grid::grid_minimize(f, r, opts));
  state.counters["points"] = grid::grid_size({f.variables(), r}).get_d();
  state.counters["threads"] = threads;
}

void BM_KernelSerial(benchmark::State& state) { run_kernel(state, 1); }
void BM_KernelParallel(benchmark::State& state) { run_kernel(state, omp_get_max_threads()); }

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({3, 2, 40})->Args({4, 3, 24})->Args({6, 4, 12})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Reference)->Apply(sizes);
BENCHMARK(BM_KernelSerial)->Apply(sizes);
BENCHMARK(BM_KernelParallel)->Apply(sizes)->UseRealTime();

BENCHMARK_MAIN();
