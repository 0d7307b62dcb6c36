#pragma once

#include <cstddef>
#include <vector>

namespace equibound {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes on [-1, 1].
QuadratureRule gauss_legendre(std::size_t n);

/// Same rule mapped to [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// Composite rule: `panels` equal subintervals of [a, b], `nodes_per_panel`
/// Gauss-Legendre nodes each.
QuadratureRule composite_gauss_legendre(std::size_t panels,
                                        std::size_t nodes_per_panel, double a,
                                        double b);

}  // namespace equibound
