#include "equibound/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "equibound/quadrature.hpp"

#include "mc_detail.hpp"

namespace equibound {

using detail::mc_mean;
using detail::reduce_blocks;
using detail::Accumulator;

MCEstimate estimate_equivocation(const SampleBatch& batch) {
  return mc_mean(batch, [](const JointDraw& d) { return conditional_entropy(d.post); });
}

MCEstimate estimate_mi(const SampleBatch& batch) {
  const double h = prior_entropy(batch.model.prior);
  MCEstimate ee = estimate_equivocation(batch);
  ee.mean = h - ee.mean;  // MI inherits the EE standard error
  return ee;
}

MCEstimate estimate_mpe(const SampleBatch& batch) {
  return mc_mean(batch, [](const JointDraw& d) { return 1.0 - d.post.ranked(0); });
}

OrderedStats estimate_ordered_stats(const SampleBatch& batch, int depth) {
  const int m_count = batch.hypothesis_count();
  if (depth < 1 || depth > m_count - 1)
    throw std::invalid_argument("estimate_ordered_stats: depth must be in [1, M-1]");

  // Layout: u, v, w, sum_sq, b_inf, delta_1..delta_depth.
  const std::size_t width = 5 + static_cast<std::size_t>(depth);
  auto total = reduce_blocks(batch, width, [&](const JointDraw& d, std::vector<Accumulator>& acc) {
    const PosteriorVector& post = d.post;
    acc[0].add(post.ranked(0));
    acc[1].add(post.ranked(1));
    acc[2].add(m_count >= 3 ? post.ranked(2) : 0.0);
    double ss = 0.0;
    for (double v : post.values) ss += v * v;
    acc[3].add(ss);
    acc[4].add(std::log(post.ranked(0)));
    double residual = 1.0 - post.ranked(0);
    for (int i = 1; i <= depth; ++i) {
      acc[4 + static_cast<std::size_t>(i)].add(
          residual * (post.ranked(i - 1) - post.ranked(i)));
      residual -= post.ranked(i);
    }
  });

  OrderedStats stats;
  stats.depth = depth;
  stats.u = total[0].estimate();
  stats.v = total[1].estimate();
  stats.w = total[2].estimate();
  stats.sum_sq = total[3].estimate();
  stats.b_infinity = total[4].estimate();
  stats.deltas.reserve(static_cast<std::size_t>(depth));
  for (int i = 1; i <= depth; ++i)
    stats.deltas.push_back(total[4 + static_cast<std::size_t>(i)].estimate());
  return stats;
}

MCEstimate estimate_gee(const SampleBatch& batch, double n) {
  if (!(n >= 1.0)) throw std::invalid_argument("estimate_gee: need n >= 1");
  return mc_mean(batch, [n](const JointDraw& d) {
    return conditional_entropy(tilted_posterior(d.post, n));
  });
}

MCEstimate estimate_gee_integral(const SampleBatch& batch) {
  // Closed form: integral over n of H_n(Theta|X=x)/n^2 equals -ln p*(x).
  return mc_mean(batch, [](const JointDraw& d) { return -std::log(d.post.ranked(0)); });
}

double gee_integral_quadrature(const PosteriorVector& post) {
  // 64 fixed nodes on a dyadically graded mesh: near-tied posteriors put a
  // boundary layer at small t that uniform panels cannot resolve.
  static const QuadratureRule rule = [] {
    QuadratureRule r;
    double b = 1.0;
    for (int panel = 0; panel < 8; ++panel) {
      const double a = panel == 7 ? 0.0 : b / 2.0;
      const QuadratureRule part = gauss_legendre(8, a, b);
      r.nodes.insert(r.nodes.end(), part.nodes.begin(), part.nodes.end());
      r.weights.insert(r.weights.end(), part.weights.begin(), part.weights.end());
      b = a;
    }
    return r;
  }();
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double t = rule.nodes[k];
    acc += rule.weights[k] * conditional_entropy(tilted_posterior(post, 1.0 / t));
  }
  return acc;
}

MCEstimate estimate_bn(const SampleBatch& batch, double n) {
  if (!(n >= 1.0)) throw std::invalid_argument("estimate_bn: need n >= 1");
  return mc_mean(batch, [n](const JointDraw& d) {
    if (n >= 1e6) return std::log(d.post.ranked(0));
    const PosteriorVector tilted = tilted_posterior(d.post, n);
    double acc = 0.0;
    for (std::size_t m = 0; m < tilted.values.size(); ++m) {
      const double w = tilted.values[m];
      if (w == 0.0) continue;  // 0 log 0 convention applies only to zero weight
      const double p = d.post.values[m];
      if (p <= 0.0)
        throw std::domain_error("estimate_bn: zero posterior with nonzero tilted weight");
      acc += w * std::log(p);
    }
    return acc;
  });
}

DeltaIntegralEstimate estimate_delta_integral(const SampleBatch& batch) {
  if (!batch.model.channel)
    throw std::invalid_argument("estimate_delta_integral: batch has no channel");
  const ChannelDensity& channel = *batch.model.channel;
  const Prior& prior = batch.model.prior;
  const int m_count = batch.hypothesis_count();

  // Layout: full integrand, diagonal part, exclusion indicator.
  auto total = reduce_blocks(batch, 3, [&](const JointDraw& d, std::vector<Accumulator>& acc) {
    const int m_star = d.post.order.front();
    const double log_pm = std::log(prior.p[static_cast<std::size_t>(m_star)]);
    const double lm = channel.log_density(m_star, d.x);
    // Per-draw weight against the evidence:
    //   sum_{m'} (p_{m'}^2 / p_m) P^2(x|m') / P(x|m) / P(x),  m = MAP index.
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(static_cast<std::size_t>(m_count),
                              -std::numeric_limits<double>::infinity());
    for (int mp = 0; mp < m_count; ++mp) {
      const double pmp = prior.p[static_cast<std::size_t>(mp)];
      if (pmp <= 0.0) continue;
      const double lt = 2.0 * std::log(pmp) + 2.0 * channel.log_density(mp, d.x) -
                        log_pm - lm - d.post.log_evidence;
      terms[static_cast<std::size_t>(mp)] = lt;
      mx = std::max(mx, lt);
    }
    double z = 0.0;
    for (double lt : terms)
      if (lt > -std::numeric_limits<double>::infinity()) z += std::exp(lt - mx);
    const double log_w = mx + std::log(z);
    if (std::abs(log_w) > 700.0) {
      acc[2].add(1.0);
      return;
    }
    acc[0].add(std::exp(log_w));
    acc[1].add(d.post.ranked(0));  // m' = m diagonal equals the MAP posterior
    acc[2].add(0.0);
  });

  DeltaIntegralEstimate out;
  out.value = total[0].estimate();
  out.diagonal = total[1].estimate();
  out.excluded = batch.count() - out.value.count;
  out.unreliable =
      static_cast<double>(out.excluded) > 0.001 * static_cast<double>(batch.count());
  return out;
}

}  // namespace equibound
