#include "equibound/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace equibound {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<int> descending_order(const std::vector<double>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
  });
  return order;
}

// Normalizes log weights in place into probabilities; returns log sum.
double normalize_log_weights(std::vector<double>& lw) {
  const double mx = *std::max_element(lw.begin(), lw.end());
  if (mx == kNegInf)
    throw std::domain_error("posterior: all log weights are -inf");
  double z = 0.0;
  for (double& v : lw) {
    v = std::exp(v - mx);
    z += v;
  }
  for (double& v : lw) v /= z;
  return mx + std::log(z);
}

}  // namespace

PosteriorVector PosteriorVector::from_values(std::vector<double> values,
                                             double log_evidence) {
  PosteriorVector post;
  post.order = descending_order(values);
  post.values = std::move(values);
  post.log_evidence = log_evidence;
  post.validate();
  return post;
}

void PosteriorVector::validate() const {
  if (values.size() != order.size() || values.empty())
    throw std::invalid_argument("PosteriorVector: size mismatch");
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0)) throw std::invalid_argument("PosteriorVector: negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("PosteriorVector: values must sum to 1");
  std::vector<bool> seen(order.size(), false);
  for (int idx : order) {
    if (idx < 0 || idx >= size() || seen[static_cast<std::size_t>(idx)])
      throw std::invalid_argument("PosteriorVector: order is not a permutation");
    seen[static_cast<std::size_t>(idx)] = true;
  }
  for (int k = 0; k + 1 < size(); ++k)
    if (ranked(k) < ranked(k + 1))
      throw std::invalid_argument("PosteriorVector: order is not descending");
}

PosteriorVector posterior(const Prior& prior, const ChannelDensity& channel,
                          std::span<const double> x) {
  const int m_count = prior.size();
  std::vector<double> lw(static_cast<std::size_t>(m_count));
  for (int m = 0; m < m_count; ++m) {
    const double pm = prior.p[static_cast<std::size_t>(m)];
    lw[static_cast<std::size_t>(m)] =
        pm > 0.0 ? std::log(pm) + channel.log_density(m, x) : kNegInf;
  }
  PosteriorVector post;
  post.log_evidence = normalize_log_weights(lw);
  post.order = descending_order(lw);
  post.values = std::move(lw);
  return post;
}

PosteriorVector tilted_posterior(const PosteriorVector& post, double n) {
  if (!(n >= 1.0)) throw std::invalid_argument("tilted_posterior: need n >= 1");
  PosteriorVector out;
  out.order = post.order;
  out.log_evidence = post.log_evidence;
  if (n >= 1e6) {
    // Exact limit: uniform over the tied maxima; avoids exp underflow noise.
    const double mx = post.ranked(0);
    out.values.assign(post.values.size(), 0.0);
    int ties = 0;
    for (double v : post.values) ties += v == mx ? 1 : 0;
    for (std::size_t m = 0; m < post.values.size(); ++m)
      if (post.values[m] == mx) out.values[m] = 1.0 / ties;
    return out;
  }
  std::vector<double> lw(post.values.size());
  for (std::size_t m = 0; m < post.values.size(); ++m)
    lw[m] = post.values[m] > 0.0 ? n * std::log(post.values[m]) : kNegInf;
  normalize_log_weights(lw);
  out.values = std::move(lw);
  return out;
}

int map_decision(const PosteriorVector& post) {
  int best = 0;
  for (int m = 1; m < post.size(); ++m)
    if (post.values[static_cast<std::size_t>(m)] > post.values[static_cast<std::size_t>(best)])
      best = m;
  return best;
}

double conditional_entropy(const PosteriorVector& post) {
  double h = 0.0;
  for (double v : post.values)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

}  // namespace equibound
