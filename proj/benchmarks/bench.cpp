#include <benchmark/benchmark.h>

#include "shadowprimes/corpus.hpp"
#include "shadowprimes/shadow_theory.hpp"

using namespace shadowprimes;

static void BM_EnumerateShadows(benchmark::State& state) {
  const Hypergraph& h = corpus::entry("shadow").hypergraph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_shadows(h));
}
BENCHMARK(BM_EnumerateShadows);

static void BM_AssSquareDecomposition(benchmark::State& state) {
  const Hypergraph& h = corpus::entry("nine-vertex").hypergraph;
  for (auto _ : state)
    benchmark::DoNotOptimize(ass_of_power(h, 2, AssMethod::Decomposition));
}
BENCHMARK(BM_AssSquareDecomposition);

static void BM_AssSquareLocalization(benchmark::State& state) {
  const Hypergraph& h = corpus::entry("nine-vertex").hypergraph;
  for (auto _ : state)
    benchmark::DoNotOptimize(ass_of_power(h, 2, AssMethod::Localization));
}
BENCHMARK(BM_AssSquareLocalization);

static void BM_CubePower(benchmark::State& state) {
  const Hypergraph& h = corpus::entry("apex-mixed").hypergraph;
  MonomialIdeal j = cover_ideal(h);
  for (auto _ : state) benchmark::DoNotOptimize(power(j, 3));
}
BENCHMARK(BM_CubePower);

static void BM_OddCycleCertificates(benchmark::State& state) {
  const Hypergraph& h = corpus::entry("shadow").hypergraph;
  for (auto _ : state) benchmark::DoNotOptimize(odd_cycle_certificates(h));
}
BENCHMARK(BM_OddCycleCertificates);

BENCHMARK_MAIN();
