#include <benchmark/benchmark.h>

#include <random>

#include "qsum/canonical.hpp"
#include "qsum/explore.hpp"

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const qsum::Graph g = qsum::random_connected_graph(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qsum::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 10, 2);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qsum::connected_graphs(n, 1));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Vns(benchmark::State& state) {
  qsum::SearchConfig c;
  c.n = static_cast<int>(state.range(0));
  c.budget = 2000;
  for (auto _ : state) benchmark::DoNotOptimize(qsum::vns_search(c));
}
BENCHMARK(BM_Vns)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
