// Serial reference vs OpenMP kernel, side by side on the enumeration
// workloads that dominate large verification sweeps.

#include <benchmark/benchmark.h>

#include "emdpoly/emd.hpp"
#include "emdpoly/hasse.hpp"
#include "emdpoly/partition.hpp"
#include "emdpoly/poly.hpp"

using namespace emdpoly;

static void BM_sum_sym_diff_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::sum_sym_diff({n, n}, {n, n}));
  }
}
BENCHMARK(BM_sum_sym_diff_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_sum_sym_diff_omp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_sym_diff({n, n}, {n, n}));
  }
}
BENCHMARK(BM_sum_sym_diff_omp)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_sum_emd_pairs_serial(benchmark::State& state) {
  const long long s = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::sum_emd_pairs(s, 5, 5));
  }
}
BENCHMARK(BM_sum_emd_pairs_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_sum_emd_pairs_omp(benchmark::State& state) {
  const long long s = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_emd_pairs(s, 5, 5));
  }
}
BENCHMARK(BM_sum_emd_pairs_omp)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_wiener_bfs_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HasseGraph g = build_hasse({n, n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::wiener_bfs(g));
  }
}
BENCHMARK(BM_wiener_bfs_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_wiener_bfs_omp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HasseGraph g = build_hasse({n, n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wiener_bfs(g));
  }
}
BENCHMARK(BM_wiener_bfs_omp)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_subset_symdiff_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::subset_symdiff_sum(n));
  }
}
BENCHMARK(BM_subset_symdiff_serial)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_subset_symdiff_omp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subset_symdiff_sum(n));
  }
}
BENCHMARK(BM_subset_symdiff_omp)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
