#pragma once

#include <cstddef>
#include <vector>

namespace equibound {

/// Quadrature reference values for a scalar (N = 1) Gaussian model.
struct OracleValues {
  double equivocation = 0.0;  ///< H(Theta|X), nats
  double mi = 0.0;            ///< I(Theta;X), nats
  double mpe = 0.0;           ///< 1 - E[max_m p]
  double e_p_star = 0.0;      ///< E[p*]
  double e_p_star2 = 0.0;     ///< E[p**]
  double sum_sq = 0.0;        ///< E[sum_m p^2]
  double delta_integral = 0.0;  ///< decision-region integral of the Delta bound
};

/// Deterministic numerical-integration oracle for N = 1 Gaussian channels.
///
/// Evaluates every expectation by composite Gauss-Legendre quadrature of the
/// exact integrand against the evidence density. Independent of the Monte
/// Carlo estimation path: posteriors are recomputed locally from the model
/// parameters.
OracleValues scalar_gaussian_oracle(const std::vector<double>& prior,
                                    const std::vector<double>& means,
                                    double variance,
                                    std::size_t panels = 64,
                                    std::size_t nodes_per_panel = 16);

}  // namespace equibound
