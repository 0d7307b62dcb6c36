#pragma once

#include <vector>

#include "equibound/sampling.hpp"

namespace equibound {

/// Monte Carlo mean with its standard error.
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

/// Monte Carlo expectations of the ordered posterior probabilities and the
/// derived per-draw statistics every bound consumes.
struct OrderedStats {
  MCEstimate u;            ///< E[p*]   (= 1 - MPE)
  MCEstimate v;            ///< E[p**]
  MCEstimate w;            ///< E[p***] (0 when M = 2)
  std::vector<MCEstimate> deltas;  ///< delta_i, i = 1..depth
  MCEstimate sum_sq;       ///< E[sum_m p^2(theta_m|X)]
  MCEstimate b_infinity;   ///< E[ln max_m p(theta_m|X)]
  int depth = 0;
};

/// Delta-bound integral estimate with its outlier accounting.
struct DeltaIntegralEstimate {
  MCEstimate value;             ///< full integrand including the diagonal
  MCEstimate diagonal;          ///< m' = m part alone (equals 1 - MPE in mean)
  std::size_t excluded = 0;     ///< draws dropped for |log ratio| > 700
  bool unreliable = false;      ///< excluded fraction > 0.1%
};

inline constexpr double kInfiniteOrder = 1e18;

/// Conditional entropy H(Theta|X) in nats, averaged over draws.
MCEstimate estimate_equivocation(const SampleBatch& batch);

/// MI = H(Theta) - EE; inherits the equivocation standard error.
MCEstimate estimate_mi(const SampleBatch& batch);

/// MPE = E[1 - max_m p(theta_m|X)].
MCEstimate estimate_mpe(const SampleBatch& batch);

/// Ordered-posterior statistics through the given depth (1 <= depth <= M-1).
OrderedStats estimate_ordered_stats(const SampleBatch& batch, int depth);

/// Generalized equivocation entropy of order n >= 1: mean Shannon entropy of
/// the tilted posterior. Pass kInfiniteOrder (or >= 1e6) for the n = inf limit.
MCEstimate estimate_gee(const SampleBatch& batch, double n);

/// Integral of H_n(Theta|X=x)/n^2 over n in [1, inf), averaged over draws.
/// Uses the closed form -ln max_m p(theta_m|x) per draw.
MCEstimate estimate_gee_integral(const SampleBatch& batch);

/// 64-node quadrature cross-check of the per-draw integral above
/// (substitution t = 1/n).
double gee_integral_quadrature(const PosteriorVector& post);

/// Tilted-posterior bound value B_n = E[sum_m p_n(theta_m|X) ln p(theta_m|X)]
/// in nats; n = kInfiniteOrder gives B_inf = E[ln max_m p].
MCEstimate estimate_bn(const SampleBatch& batch, double n);

/// Importance-sampled decision-region integral of the Delta-bound
/// (sum over m' of prior ratios times squared density ratios, sampled
/// against the evidence). Requires a batch with a real channel.
DeltaIntegralEstimate estimate_delta_integral(const SampleBatch& batch);

}  // namespace equibound
