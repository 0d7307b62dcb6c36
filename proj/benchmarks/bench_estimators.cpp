#include <benchmark/benchmark.h>

#include "equibound/bounds.hpp"
#include "equibound/flem.hpp"

using namespace equibound;

namespace {

const SampleBatch& scalar_batch() {
  static const SampleBatch batch = sample_joint(
      make_scalar_gaussian({0.25, 0.25, 0.25, 0.25}, {-1.5, -0.5, 0.5, 1.5}, 1.0),
      100000, 3);
  return batch;
}

void BM_SampleJointScalar(benchmark::State& state) {
  const HypothesisModel model = make_scalar_gaussian({0.5, 0.5}, {-0.5, 0.5}, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_joint(model, static_cast<std::size_t>(state.range(0)), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleJointScalar)->Arg(10000)->Arg(100000);

void BM_SampleJointFlash(benchmark::State& state) {
  const HypothesisModel model = build_model(FlemConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_joint(model, static_cast<std::size_t>(state.range(0)), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleJointFlash)->Arg(10000);

void BM_EstimateEquivocation(benchmark::State& state) {
  const SampleBatch& batch = scalar_batch();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_equivocation(batch));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.count()));
}
BENCHMARK(BM_EstimateEquivocation);

void BM_OrderedStats(benchmark::State& state) {
  const SampleBatch& batch = scalar_batch();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ordered_stats(batch, 3));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.count()));
}
BENCHMARK(BM_OrderedStats);

void BM_TiltedEntropy(benchmark::State& state) {
  const SampleBatch& batch = scalar_batch();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_gee(batch, 2.0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.count()));
}
BENCHMARK(BM_TiltedEntropy);

void BM_TwoPosteriorBound(benchmark::State& state) {
  const SampleBatch& batch = scalar_batch();
  for (auto _ : state) benchmark::DoNotOptimize(fm_two_bound(batch));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.count()));
}
BENCHMARK(BM_TwoPosteriorBound);

void BM_FullReport(benchmark::State& state) {
  const SampleBatch& batch = scalar_batch();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_report(batch, ReportConfig{3, 2.0}));
}
BENCHMARK(BM_FullReport);

}  // namespace
