#pragma once

#include <memory>
#include <span>
#include <vector>

#include "equibound/hypothesis.hpp"
#include "equibound/rng.hpp"

namespace equibound {

/// Conditional output density family P(x | theta_m), x in R^N.
///
/// Implementations must expose a log-density evaluator (nats) and a sampler.
/// Each conditional density is assumed normalized over R^N; this holds by
/// construction for GaussianChannel, custom channels are trusted.
class ChannelDensity {
 public:
  virtual ~ChannelDensity() = default;

  virtual int hypothesis_count() const = 0;
  virtual int output_dim() const = 0;

  /// ln P(x | theta_m) in nats. Throws std::invalid_argument on a
  /// dimension mismatch.
  virtual double log_density(int m, std::span<const double> x) const = 0;

  /// Draws x ~ P(. | theta_m) into `out` (size N).
  virtual void sample(int m, DrawStream& rng, std::span<double> out) const = 0;
};

/// Isotropic Gaussian channel: X | theta_m ~ N(means[m], variance * I_N).
class GaussianChannel final : public ChannelDensity {
 public:
  GaussianChannel(std::vector<std::vector<double>> means, double variance);

  int hypothesis_count() const override { return static_cast<int>(means_.size()); }
  int output_dim() const override { return dim_; }
  double log_density(int m, std::span<const double> x) const override;
  void sample(int m, DrawStream& rng, std::span<double> out) const override;

  const std::vector<std::vector<double>>& means() const { return means_; }
  double variance() const { return variance_; }

 private:
  std::vector<std::vector<double>> means_;
  double variance_;
  int dim_;
  double log_norm_;  // -N/2 ln(2 pi sigma^2)
};

/// Prior plus channel: the complete hypothesis-testing model.
struct HypothesisModel {
  Prior prior;
  std::shared_ptr<const ChannelDensity> channel;

  int hypothesis_count() const { return prior.size(); }

  void validate() const;
};

/// Convenience constructor for scalar (N=1) Gaussian models.
HypothesisModel make_scalar_gaussian(const std::vector<double>& prior,
                                     const std::vector<double>& means,
                                     double variance);

}  // namespace equibound
