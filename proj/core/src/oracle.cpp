#include "equibound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "equibound/quadrature.hpp"

namespace equibound {

OracleValues scalar_gaussian_oracle(const std::vector<double>& prior,
                                    const std::vector<double>& means,
                                    double variance, std::size_t panels,
                                    std::size_t nodes_per_panel) {
  const std::size_t m_count = prior.size();
  if (m_count < 2 || means.size() != m_count)
    throw std::invalid_argument("scalar_gaussian_oracle: bad model");
  if (!(variance > 0.0))
    throw std::invalid_argument("scalar_gaussian_oracle: variance must be > 0");

  const double sigma = std::sqrt(variance);
  const double lo = *std::min_element(means.begin(), means.end()) - 10.0 * sigma;
  const double hi = *std::max_element(means.begin(), means.end()) + 10.0 * sigma;
  const QuadratureRule rule = composite_gauss_legendre(panels, nodes_per_panel, lo, hi);
  const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * variance);

  double prior_h = 0.0;
  for (double p : prior)
    if (p > 0.0) prior_h -= p * std::log(p);

  OracleValues out;
  std::vector<double> log_lik(m_count), post(m_count);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = rule.nodes[k];
    const double wq = rule.weights[k];

    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < m_count; ++m) {
      const double d = x - means[m];
      log_lik[m] = log_norm - d * d / (2.0 * variance);
      if (prior[m] > 0.0) mx = std::max(mx, std::log(prior[m]) + log_lik[m]);
    }
    double z = 0.0;
    for (std::size_t m = 0; m < m_count; ++m)
      post[m] = prior[m] > 0.0 ? std::exp(std::log(prior[m]) + log_lik[m] - mx) : 0.0;
    for (double v : post) z += v;
    const double evidence = std::exp(mx) * z;  // P(x)
    for (double& v : post) v /= z;

    double h = 0.0, ss = 0.0, p1 = 0.0, p2 = 0.0;
    std::size_t m_star = 0;
    for (std::size_t m = 0; m < m_count; ++m) {
      const double v = post[m];
      if (v > 0.0) h -= v * std::log(v);
      ss += v * v;
      if (v > p1) {
        p2 = p1;
        p1 = v;
        m_star = m;
      } else if (v > p2) {
        p2 = v;
      }
    }

    // Delta-bound integrand: sum_{m'} (p_{m'}^2 / p_m) P^2(x|m') / P(x|m),
    // m the MAP index at x.
    double delta_term = 0.0;
    if (prior[m_star] > 0.0) {
      for (std::size_t mp = 0; mp < m_count; ++mp) {
        if (prior[mp] <= 0.0) continue;
        const double lt = 2.0 * std::log(prior[mp]) + 2.0 * log_lik[mp] -
                          std::log(prior[m_star]) - log_lik[m_star];
        delta_term += std::exp(lt);
      }
    }

    out.equivocation += wq * evidence * h;
    out.sum_sq += wq * evidence * ss;
    out.e_p_star += wq * evidence * p1;
    out.e_p_star2 += wq * evidence * p2;
    out.delta_integral += wq * delta_term;
  }

  out.mpe = 1.0 - out.e_p_star;
  out.mi = prior_h - out.equivocation;
  return out;
}

}  // namespace equibound
