#include <benchmark/benchmark.h>

#include "sortnet/edelman_greene.hpp"
#include "sortnet/patterns.hpp"
#include "sortnet/sampler.hpp"

namespace {

using namespace sortnet;

void BM_SampleStaircaseTableau(benchmark::State& state) {
  const auto shape = YoungDiagram::staircase(static_cast<int>(state.range(0)));
  SeededRng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_uniform_syt(shape, rng));
  }
  state.SetItemsProcessed(state.iterations() * shape.size());
}
BENCHMARK(BM_SampleStaircaseTableau)->Arg(100)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_EdelmanGreeneForward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SeededRng rng(2);
  const auto t = sample_uniform_syt(YoungDiagram::staircase(n), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eg_forward(t));
  }
}
BENCHMARK(BM_EdelmanGreeneForward)->Arg(100)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_EdelmanGreeneInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SeededRng rng(3);
  const auto w = sample_random_network(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eg_inverse(w));
  }
}
BENCHMARK(BM_EdelmanGreeneInverse)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_OccurrencesAndGreedyCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SeededRng rng(4);
  const auto w = sample_random_network(n, rng);
  const Pattern gamma({1, 2});
  for (auto _ : state) {
    const auto occ = find_occurrences(w, gamma);
    benchmark::DoNotOptimize(count_disjoint_greedy(occ));
  }
}
BENCHMARK(BM_OccurrencesAndGreedyCount)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
