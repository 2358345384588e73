#include <benchmark/benchmark.h>

#include "sdgraph/enumeration.hpp"
#include "sdgraph/verification.hpp"

namespace {

void BM_ConnectedGraphs(benchmark::State& state) {
  for (auto _ : state) {
    sdgraph::ConnectedGraphCatalog catalog;
    benchmark::DoNotOptimize(
        catalog.of_order(static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_ConnectedGraphs)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sdgraph::verify_theorems(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VerifyAll)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
