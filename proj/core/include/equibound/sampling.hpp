#pragma once

#include <cstdint>
#include <vector>

#include "equibound/channel.hpp"
#include "equibound/posterior.hpp"

namespace equibound {

/// One joint draw: theta ~ prior, x ~ P(.|theta), plus the posterior at x.
struct JointDraw {
  int theta = 0;
  std::vector<double> x;
  PosteriorVector post;
};

/// Seeded collection of joint draws from a model. Deterministic for a given
/// (model, count, seed) independent of worker count: draw i uses the
/// counter-based stream DrawStream(seed, i).
struct SampleBatch {
  HypothesisModel model;
  std::uint64_t seed = 0;
  std::vector<JointDraw> draws;

  std::size_t count() const { return draws.size(); }
  int hypothesis_count() const { return model.hypothesis_count(); }

  /// Batch whose "draws" cycle through a fixed list of posteriors
  /// (draw i replays posteriors[i % L]). Used for oracle and replay tests;
  /// the x vectors are empty and the model channel is null.
  static SampleBatch replay(const Prior& prior,
                            const std::vector<std::vector<double>>& posteriors,
                            std::size_t count);
};

SampleBatch sample_joint(const HypothesisModel& model, std::size_t count,
                         std::uint64_t seed);

}  // namespace equibound
