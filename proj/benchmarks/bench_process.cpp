#include <benchmark/benchmark.h>

#include "hyperavg/experiments.hpp"
#include "hyperavg/families.hpp"
#include "hyperavg/process.hpp"

using namespace hyperavg;

static void BM_advance_star(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = star_hypergraph(n);
  const auto x0 = random_weights(n, 1);
  for (auto _ : state) {
    auto x = x0;
    auto rng = stream_for_trial(7, 0);
    advance(h, x, 10000, rng);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 10000);
}
BENCHMARK(BM_advance_star)->RangeMultiplier(4)->Range(16, 4096);

static void BM_simulate_records_knr(benchmark::State& state) {
  const auto h = complete_r_uniform(static_cast<std::size_t>(state.range(0)), 3);
  const auto x = random_weights(h.vertex_count(), 2);
  for (auto _ : state) {
    auto rec = simulate(h, x, SimConfig{3, 2000, 1});
    benchmark::DoNotOptimize(rec.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 2000);
}
BENCHMARK(BM_simulate_records_knr)->DenseRange(6, 18, 4);

static void BM_exact_enumeration(benchmark::State& state) {
  const auto h = complete_r_uniform(5, 3);  // 10 edges
  const auto x = random_weights(5, 3);
  const auto t = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_expected_sq_norm(h, x, t));
  }
}
BENCHMARK(BM_exact_enumeration)->DenseRange(2, 6, 1);

static void BM_martingale_trace(benchmark::State& state) {
  const auto h = complete_r_uniform(6, 3);
  const auto x = random_weights(6, 4);
  for (auto _ : state) {
    auto rec = martingale_trace(h, x, SimConfig{5, 100, 1});
    benchmark::DoNotOptimize(rec.data());
  }
}
BENCHMARK(BM_martingale_trace);

BENCHMARK_MAIN();
