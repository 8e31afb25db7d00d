#include <benchmark/benchmark.h>

#include "hyperavg/families.hpp"
#include "hyperavg/spectral.hpp"

using namespace hyperavg;

static void BM_jacobi_path_laplacian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto L = graph_laplacian(path_graph(n));
  for (auto _ : state) {
    auto s = eigenvalues_symmetric(L);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_jacobi_path_laplacian)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_lambda1_complete_r_uniform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = complete_r_uniform(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda1(h));
  }
}
BENCHMARK(BM_lambda1_complete_r_uniform)->DenseRange(6, 14, 2);

static void BM_codegree_laplacian_assembly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = complete_r_uniform(n, 3);
  for (auto _ : state) {
    auto L = codegree_laplacian_int(h);
    benchmark::DoNotOptimize(L.at(0, 0));
  }
}
BENCHMARK(BM_codegree_laplacian_assembly)->DenseRange(6, 14, 2);

BENCHMARK_MAIN();
