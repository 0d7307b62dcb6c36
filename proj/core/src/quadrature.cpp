#include "equibound/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equibound {

QuadratureRule gauss_legendre(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration from the Chebyshev-like initial guess.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                           (static_cast<double>(k) - 1.0) * p0) /
                          static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  QuadratureRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(std::size_t panels,
                                        std::size_t nodes_per_panel, double a,
                                        double b) {
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: need panels >= 1");
  QuadratureRule rule;
  rule.nodes.reserve(panels * nodes_per_panel);
  rule.weights.reserve(panels * nodes_per_panel);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const QuadratureRule panel =
        gauss_legendre(nodes_per_panel, a + static_cast<double>(p) * h,
                       a + static_cast<double>(p + 1) * h);
    rule.nodes.insert(rule.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    rule.weights.insert(rule.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return rule;
}

}  // namespace equibound
