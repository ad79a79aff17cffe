// Serial reference vs OpenMP batch kernels on the property-suite workloads.
#include <benchmark/benchmark.h>

#include "plumb/batch.hpp"

namespace {

void BM_WeightBatch(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? plumb::Execution::Serial : plumb::Execution::Parallel;
  const auto instances = plumb::weight_instances(1000, 0x5eed, 6);
  for (auto _ : state) {
    auto out = plumb::solve_weight_batch(instances, mode);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(instances.size()));
}

void BM_LemmaBatch(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? plumb::Execution::Serial : plumb::Execution::Parallel;
  const auto instances = plumb::lemma_instances(1000, 0x1e44a, 6);
  for (auto _ : state) {
    auto out = plumb::lemma_batch(instances, mode);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(instances.size()));
}

void BM_CorpusVerify(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? plumb::Execution::Serial : plumb::Execution::Parallel;
  const auto graphs = plumb::standard_corpus(500, 0xc0ffee);
  for (auto _ : state) {
    auto out = plumb::verify_corpus(graphs, mode);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

}  // namespace

BENCHMARK(BM_WeightBatch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LemmaBatch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusVerify)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
