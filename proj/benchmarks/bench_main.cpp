#include <benchmark/benchmark.h>

#include "nilharm/laplacian.hpp"
#include "nilharm/linalg.hpp"
#include "nilharm/polynomial.hpp"

using namespace nilharm;

static void BM_LaplacianMatrixLattice(benchmark::State& state) {
  const auto s = GroupSchema::lattice(static_cast<int>(state.range(0)));
  const auto mu = Measure::simple_walk(s);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_matrix(s, mu, k));
}
BENCHMARK(BM_LaplacianMatrixLattice)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_LaplacianMatrixHeisenberg(benchmark::State& state) {
  const auto s = GroupSchema::heisenberg(1);
  const auto mu = Measure::simple_walk(s);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_matrix(s, mu, k));
}
BENCHMARK(BM_LaplacianMatrixHeisenberg)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_LaplacianMatrixUnitriangular(benchmark::State& state) {
  const auto s = GroupSchema::unitriangular(4);
  const auto mu = Measure::simple_walk(s);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_matrix(s, mu, k));
}
BENCHMARK(BM_LaplacianMatrixUnitriangular)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_TranslateLeft(benchmark::State& state) {
  const auto s = GroupSchema::heisenberg(1);
  const int k = static_cast<int>(state.range(0));
  Polynomial p(s);
  for (const auto& m : pk_basis(s, k)) p.add_term(m, 1);
  const GroupElement u{2, -1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(translate_left(p, u));
}
BENCHMARK(BM_TranslateLeft)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_KernelBasis(benchmark::State& state) {
  const auto s = GroupSchema::lattice(3);
  const auto lap = laplacian_matrix(s, Measure::simple_walk(s), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(lap));
}
BENCHMARK(BM_KernelBasis)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
