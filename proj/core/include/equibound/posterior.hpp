#pragma once

#include <span>
#include <vector>

#include "equibound/channel.hpp"
#include "equibound/hypothesis.hpp"

namespace equibound {

/// Normalized posterior PMF p(theta_m | x) for one output draw, together
/// with the permutation sorting it in descending order and the log
/// evidence ln P(x).
struct PosteriorVector {
  std::vector<double> values;
  std::vector<int> order;  // values[order[0]] >= values[order[1]] >= ...
  double log_evidence = 0.0;

  int size() const { return static_cast<int>(values.size()); }

  /// k-th largest posterior probability (k = 0 is p*).
  double ranked(int k) const { return values[order[k]]; }

  /// Builds the descending order permutation for explicitly given values.
  static PosteriorVector from_values(std::vector<double> values,
                                     double log_evidence = 0.0);

  void validate() const;
};

/// Bayes posterior for output x, computed with max-shifted exponentiation
/// of the log weights ln p_m + ln P(x|theta_m); no intermediate
/// over/underflow for any finite log-likelihoods.
///
/// Throws std::domain_error if every log weight is -inf.
PosteriorVector posterior(const Prior& prior, const ChannelDensity& channel,
                          std::span<const double> x);

/// Tilted posterior of order n >= 1: p_n(theta_m|x) = p^n(theta_m|x) / Z_n(x)
/// with Z_n(x) = sum_m p^n(theta_m|x), evaluated in log space. The order
/// permutation of the input is preserved. Orders >= 1e6 return the exact
/// one-hot limit.
PosteriorVector tilted_posterior(const PosteriorVector& post, double n);

/// MAP decision: argmax_m values[m], ties broken by lowest index.
int map_decision(const PosteriorVector& post);

/// Shannon entropy of the posterior PMF in nats, 0 ln 0 = 0.
double conditional_entropy(const PosteriorVector& post);

}  // namespace equibound
