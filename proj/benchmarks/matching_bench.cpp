#include <benchmark/benchmark.h>

#include <random>

#include "sdgraph/matching.hpp"

namespace {

sdgraph::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<sdgraph::Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return sdgraph::Graph::from_edges(n, edges);
}

void BM_MaximumMatching(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdgraph::maximum_matching(g));
  }
}
BENCHMARK(BM_MaximumMatching)->Arg(16)->Arg(32)->Arg(62);

void BM_EnumerateMaximumMatchings(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdgraph::enumerate_maximum_matchings(g));
  }
  state.counters["matchings"] = static_cast<double>(
      sdgraph::enumerate_maximum_matchings(g).size());
}
BENCHMARK(BM_EnumerateMaximumMatchings)->Arg(8)->Arg(10)->Arg(12);

}  // namespace
