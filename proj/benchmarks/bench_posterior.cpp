#include <benchmark/benchmark.h>

#include <vector>

#include "equibound/flem.hpp"
#include "equibound/posterior.hpp"
#include "equibound/rng.hpp"

using namespace equibound;

namespace {

// Posterior evaluation cost per output vector, scalar binary model vs the
// 64-dimensional flash model.
void BM_PosteriorScalar(benchmark::State& state) {
  const HypothesisModel model = make_scalar_gaussian({0.5, 0.5}, {-0.5, 0.5}, 1.0);
  DrawStream rng(1, 0);
  std::vector<double> x(1);
  model.channel->sample(0, rng, x);
  for (auto _ : state)
    benchmark::DoNotOptimize(posterior(model.prior, *model.channel, x));
}
BENCHMARK(BM_PosteriorScalar);

void BM_PosteriorFlash(benchmark::State& state) {
  const HypothesisModel model = build_model(FlemConfig{});
  DrawStream rng(1, 0);
  std::vector<double> x(static_cast<std::size_t>(model.channel->output_dim()));
  model.channel->sample(0, rng, x);
  for (auto _ : state)
    benchmark::DoNotOptimize(posterior(model.prior, *model.channel, x));
}
BENCHMARK(BM_PosteriorFlash);

void BM_TiltedPosterior(benchmark::State& state) {
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += (values[i] = 1.0 / (i + 1.0));
  for (double& v : values) v /= sum;
  const PosteriorVector post = PosteriorVector::from_values(values);
  for (auto _ : state) benchmark::DoNotOptimize(tilted_posterior(post, 2.0));
}
BENCHMARK(BM_TiltedPosterior)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
