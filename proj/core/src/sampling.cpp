#include "equibound/sampling.hpp"

#include <exception>
#include <mutex>
#include <stdexcept>

#include "equibound/parallel.hpp"

namespace equibound {

namespace {

int sample_hypothesis(const Prior& prior, DrawStream& rng) {
  const double u = rng.uniform();
  double cdf = 0.0;
  for (int m = 0; m < prior.size(); ++m) {
    cdf += prior.p[static_cast<std::size_t>(m)];
    if (u <= cdf) return m;
  }
  return prior.size() - 1;  // guards against cdf rounding below 1
}

}  // namespace

SampleBatch sample_joint(const HypothesisModel& model, std::size_t count,
                         std::uint64_t seed) {
  model.validate();
  if (count < 1) throw std::invalid_argument("sample_joint: count must be >= 1");

  SampleBatch batch;
  batch.model = model;
  batch.seed = seed;
  batch.draws.resize(count);

  const int dim = model.channel->output_dim();
  std::exception_ptr failure;
  std::mutex failure_mutex;

  for_each_block(count, [&](std::size_t, std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) {
        DrawStream rng(seed, i);
        JointDraw& draw = batch.draws[i];
        draw.theta = sample_hypothesis(model.prior, rng);
        draw.x.resize(static_cast<std::size_t>(dim));
        model.channel->sample(draw.theta, rng, draw.x);
        draw.post = posterior(model.prior, *model.channel, draw.x);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  return batch;
}

SampleBatch SampleBatch::replay(const Prior& prior,
                                const std::vector<std::vector<double>>& posteriors,
                                std::size_t count) {
  prior.validate();
  if (posteriors.empty())
    throw std::invalid_argument("SampleBatch::replay: empty posterior list");
  if (count < 1)
    throw std::invalid_argument("SampleBatch::replay: count must be >= 1");

  std::vector<PosteriorVector> prepared;
  prepared.reserve(posteriors.size());
  for (const auto& v : posteriors) {
    if (static_cast<int>(v.size()) != prior.size())
      throw std::invalid_argument("SampleBatch::replay: posterior/prior size mismatch");
    prepared.push_back(PosteriorVector::from_values(v));
  }

  SampleBatch batch;
  batch.model.prior = prior;
  batch.model.channel = nullptr;
  batch.seed = 0;
  batch.draws.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    batch.draws[i].theta = 0;
    batch.draws[i].post = prepared[i % prepared.size()];
  }
  return batch;
}

}  // namespace equibound
