#include <benchmark/benchmark.h>

#include <string>

#include "sqci/graph.hpp"
#include "sqci/products.hpp"

namespace {

const sqci::SimplicialGraph& graph(const std::string& name) {
  static sqci::SimplicialGraph o7 = sqci::load_graph(std::string(SQCI_CORPUS_DIR) + "/cacti/o7.graph");
  static sqci::SimplicialGraph chain7 = sqci::load_graph(std::string(SQCI_CORPUS_DIR) + "/cacti/chain7.graph");
  return name == "o7" ? o7 : chain7;
}

void BM_Serial(benchmark::State& st, const char* name) {
  const auto& g = graph(name);
  for (auto _ : st) benchmark::DoNotOptimize(sqci::standard_sets_serial(g));
  st.SetLabel(std::to_string(g.size()) + " vertices");
}

void BM_Parallel(benchmark::State& st, const char* name) {
  const auto& g = graph(name);
  for (auto _ : st) benchmark::DoNotOptimize(sqci::standard_sets_parallel(g));
  st.SetLabel(std::to_string(g.size()) + " vertices");
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serial, o7, "o7")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Parallel, o7, "o7")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Serial, chain7, "chain7")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Parallel, chain7, "chain7")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
