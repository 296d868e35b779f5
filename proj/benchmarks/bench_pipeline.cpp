#include "okh/evencheck.hpp"
#include "okh/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace okh;

namespace {

MarkedDiagram pretzel(int n) {
  const auto p = torsion_pretzel(n);
  return pretzel_pd(p[0], p[1], p[2]);
}

void BM_ReducedPretzel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_pretzel(n, {}));
}
BENCHMARK(BM_ReducedPretzel)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_FullPretzel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_pretzel_full(n, {}));
}
BENCHMARK(BM_FullPretzel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SignSolve(benchmark::State& state) {
  const StateCube cube = build_hypercube(pretzel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_edge_signs(cube, Flavor::Y));
}
BENCHMARK(BM_SignSolve)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_EvenComplex(benchmark::State& state) {
  const MarkedDiagram d = pretzel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto el = gaussian_eliminate(even_complex(d), {});
    benchmark::DoNotOptimize(homology_groups(el.complex));
  }
}
BENCHMARK(BM_EvenComplex)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  DenseInt m(n, std::vector<Integer>(n));
  for (auto& row : m) {
    for (auto& x : row) x = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, n, n));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(8, 32);

}  // namespace

BENCHMARK_MAIN();
