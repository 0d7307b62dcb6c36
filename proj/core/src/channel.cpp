#include "equibound/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equibound {

GaussianChannel::GaussianChannel(std::vector<std::vector<double>> means,
                                 double variance)
    : means_(std::move(means)), variance_(variance) {
  if (means_.empty()) throw std::invalid_argument("GaussianChannel: no means");
  if (!(variance_ > 0.0))
    throw std::invalid_argument("GaussianChannel: variance must be > 0");
  dim_ = static_cast<int>(means_.front().size());
  if (dim_ < 1) throw std::invalid_argument("GaussianChannel: empty mean vector");
  for (const auto& mu : means_)
    if (static_cast<int>(mu.size()) != dim_)
      throw std::invalid_argument("GaussianChannel: inconsistent mean dimensions");
  log_norm_ = -0.5 * dim_ * std::log(2.0 * std::numbers::pi * variance_);
}

double GaussianChannel::log_density(int m, std::span<const double> x) const {
  if (m < 0 || m >= hypothesis_count())
    throw std::invalid_argument("GaussianChannel: hypothesis index out of range");
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("GaussianChannel: output dimension mismatch");
  const auto& mu = means_[static_cast<std::size_t>(m)];
  double q = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double d = x[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
    q += d * d;
  }
  return log_norm_ - q / (2.0 * variance_);
}

void GaussianChannel::sample(int m, DrawStream& rng, std::span<double> out) const {
  if (m < 0 || m >= hypothesis_count())
    throw std::invalid_argument("GaussianChannel: hypothesis index out of range");
  if (static_cast<int>(out.size()) != dim_)
    throw std::invalid_argument("GaussianChannel: output dimension mismatch");
  const auto& mu = means_[static_cast<std::size_t>(m)];
  const double sigma = std::sqrt(variance_);
  for (int i = 0; i < dim_; ++i)
    out[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] + sigma * rng.normal();
}

void HypothesisModel::validate() const {
  prior.validate();
  if (!channel) throw std::invalid_argument("HypothesisModel: null channel");
  if (channel->hypothesis_count() != prior.size())
    throw std::invalid_argument("HypothesisModel: prior/channel size mismatch");
}

HypothesisModel make_scalar_gaussian(const std::vector<double>& prior,
                                     const std::vector<double>& means,
                                     double variance) {
  std::vector<std::vector<double>> m2;
  m2.reserve(means.size());
  for (double mu : means) m2.push_back({mu});
  HypothesisModel model{Prior{prior},
                        std::make_shared<GaussianChannel>(std::move(m2), variance)};
  model.validate();
  return model;
}

}  // namespace equibound
