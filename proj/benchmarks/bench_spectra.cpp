#include <benchmark/benchmark.h>

#include <random>

#include "qsum/explore.hpp"
#include "qsum/polynomial.hpp"
#include "qsum/reduction.hpp"
#include "qsum/spectra.hpp"

namespace {

void BM_QSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const qsum::Graph g = qsum::random_connected_graph(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qsum::q_spectrum(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_QSpectrum)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_FGap(benchmark::State& state) {
  const qsum::Graph g = qsum::build_star_plus_edge(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qsum::f_gap(g));
}
BENCHMARK(BM_FGap)->Arg(10)->Arg(20)->Arg(50);

void BM_QuotientPolynomial(benchmark::State& state) {
  const auto f = qsum::FamilyInstance::pendant_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qsum::char_poly_exact(qsum::lemma_quotient(f).entries));
}
BENCHMARK(BM_QuotientPolynomial)->Arg(20)->Arg(100);

}  // namespace
