#include "equibound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mc_detail.hpp"

namespace equibound {

namespace {

constexpr double kRegionTol = 1e-9;

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double binary_entropy(double p) { return -xlnx(p) - xlnx(1.0 - p); }

// Piecewise-linear diagonal profile of Phi: value ln k at t = 1/k,
// k = 2..M, extended below 1/M with the slope of the last segment.
double phi_diag(double t, int M) {
  if (t > 0.5) t = 0.5;
  int k = 2;
  if (t > 0.0) k = std::clamp(static_cast<int>(std::floor(1.0 / t)), 2, M - 1);
  if (M == 2) {
    // Single vertex at (1/2, ln 2); close linearly to the origin.
    return 2.0 * t * std::numbers::ln2;
  }
  const double t0 = 1.0 / static_cast<double>(k + 1);
  const double t1 = 1.0 / static_cast<double>(k);
  const double f0 = std::log(static_cast<double>(k + 1));
  const double f1 = std::log(static_cast<double>(k));
  return f0 + (t - t0) * (f1 - f0) / (t1 - t0);
}

}  // namespace

double fano_ee_upper(double pe, int M) {
  if (M < 2) throw std::invalid_argument("fano_ee_upper: need M >= 2");
  if (pe < -kRegionTol || pe > 1.0 + kRegionTol)
    throw std::invalid_argument("fano_ee_upper: pe outside [0, 1]");
  pe = std::clamp(pe, 0.0, 1.0);
  return binary_entropy(pe) + pe * std::log(static_cast<double>(M - 1));
}

double fano1_ee_upper(double pe, double dp1, int M) {
  if (M < 2) throw std::invalid_argument("fano1_ee_upper: need M >= 2");
  if (dp1 < -kRegionTol || dp1 > pe + kRegionTol || pe > 1.0 + kRegionTol)
    throw std::invalid_argument("fano1_ee_upper: need 0 <= dp1 <= pe <= 1");
  pe = std::clamp(pe, 0.0, 1.0);
  dp1 = std::clamp(dp1, 0.0, pe);
  const double rest = pe - dp1;
  double value = -xlnx(1.0 - pe) - xlnx(dp1) - xlnx(rest);
  if (rest > 0.0 && M > 2) value += rest * std::log(static_cast<double>(M - 2));
  return value;
}

double fano2_ee_upper(double pe, double dp1, double dp2, int M) {
  if (M < 3) throw std::invalid_argument("fano2_ee_upper: need M >= 3");
  if (dp2 < -kRegionTol || dp2 > dp1 + kRegionTol || dp1 > pe + kRegionTol ||
      dp1 > 1.0 - pe + kRegionTol || pe > 1.0 + kRegionTol)
    throw std::invalid_argument("fano2_ee_upper: ordering violation");
  pe = std::clamp(pe, 0.0, 1.0);
  dp1 = std::clamp(dp1, 0.0, pe);
  dp2 = std::clamp(dp2, 0.0, dp1);
  const double rest = std::max(pe - dp1 - dp2, 0.0);
  double value = -xlnx(1.0 - pe) - xlnx(dp1) - xlnx(dp2) - xlnx(rest);
  if (rest > 0.0 && M > 3) value += rest * std::log(static_cast<double>(M - 3));
  return value;
}

double fm_ee_lower(double pe) {
  if (pe < -kRegionTol || pe > 1.0 + kRegionTol)
    throw std::invalid_argument("fm_ee_lower: pe outside [0, 1]");
  pe = std::clamp(pe, 0.0, 1.0);
  return -std::log(1.0 - pe);  // +inf at pe = 1, reported as-is
}

double cfm_phi_star(double u, int M, bool* clamped) {
  if (M < 2) throw std::invalid_argument("cfm_phi_star: need M >= 2");
  if (u < -kRegionTol || u > 1.0 + kRegionTol)
    throw std::invalid_argument("cfm_phi_star: u outside [0, 1]");
  if (clamped) *clamped = false;
  const double u_max = static_cast<double>(M - 1) / M;
  if (u > u_max + kRegionTol && clamped) *clamped = true;
  u = std::clamp(u, 0.0, u_max);
  // Segment n covers [(n-1)/n, n/(n+1)].
  int n = 1;
  if (u < 1.0) n = std::clamp(static_cast<int>(std::floor(1.0 / (1.0 - u))), 1, M - 1);
  const double a = n * (n + 1.0) * std::log((n + 1.0) / n);
  const double b = std::log(static_cast<double>(n));
  return a * (u - (n - 1.0) / n) + b;
}

double fmbn_ee_lower(double pe, const std::vector<double>& deltas) {
  double arg = 1.0 - pe;
  for (double d : deltas) {
    if (d < -kRegionTol)
      throw std::invalid_argument("fmbn_ee_lower: negative delta");
    arg -= std::max(d, 0.0);
  }
  if (!(arg > 0.0))
    throw std::domain_error("fmbn_ee_lower: inconsistent statistics (argument <= 0)");
  return -std::log(arg);
}

double phi_two(double u, double v, int M, bool* projected) {
  if (M < 2) throw std::invalid_argument("phi_two: need M >= 2");
  if (projected) *projected = false;
  if (v < -kRegionTol || v > std::min(u, 1.0 - u) + kRegionTol || u < -kRegionTol ||
      u > 1.0 + kRegionTol)
    throw std::invalid_argument("phi_two: (u, v) outside the allowed region");
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, std::min(u, 1.0 - u));
  const double pi = 1.0 - u;
  // With M hypotheses the remaining mass must fit under v:
  // feasibility requires v >= (1-u)/(M-1).
  const double v_min = pi / static_cast<double>(M - 1);
  if (v < v_min) {
    if (projected && v < v_min - kRegionTol) *projected = true;
    v = v_min;
  }
  if (v <= 0.0) return -xlnx(u);  // u = 1
  const int n = std::clamp(static_cast<int>(std::floor(pi / v)), 1,
                           std::max(1, M - 2));
  const double nv = n * v;
  const double rest = std::max(pi - nv, 0.0);
  return -xlnx(u) - nv * std::log(v) - xlnx(rest);
}

FmTwoEstimate fm_two_bound(const SampleBatch& batch) {
  const int M = batch.hypothesis_count();
  auto total = detail::reduce_blocks(
      batch, 2, [&](const JointDraw& d, std::vector<detail::Accumulator>& acc) {
        bool proj = false;
        acc[0].add(phi_two(d.post.ranked(0), d.post.ranked(1), M, &proj));
        acc[1].add(proj ? 1.0 : 0.0);
      });
  FmTwoEstimate out;
  out.value = total[0].estimate();
  out.projected = static_cast<std::size_t>(std::llround(total[1].sum));
  return out;
}

double convex_phi(double u, double v, int M) {
  if (M < 2) throw std::invalid_argument("convex_phi: need M >= 2");
  if (v < -kRegionTol || v > std::min(u, 1.0 - u) + kRegionTol || u < -kRegionTol ||
      u > 1.0 + kRegionTol)
    throw std::invalid_argument("convex_phi: (u, v) outside the allowed region");
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, std::min(u, 1.0 - u));
  // Fan from A = (1, 0): the ray through (u, v) meets the diagonal at
  // t = v / (1 + v - u) after a fraction r = 1 + v - u of its length.
  const double r = 1.0 + v - u;
  if (r <= 0.0) return 0.0;  // vertex A
  const double t = v / r;
  return r * phi_diag(t, M);
}

double capacity_mi_upper(double sum_sq, int M, bool prior_is_uniform) {
  if (M < 2) throw std::invalid_argument("capacity_mi_upper: need M >= 2");
  if (!prior_is_uniform)
    throw std::invalid_argument(
        "capacity_mi_upper: uniform prior only; use fmbn_ee_lower at full depth");
  if (sum_sq < 1.0 / M - kRegionTol || sum_sq > 1.0 + kRegionTol)
    throw std::invalid_argument("capacity_mi_upper: sum_sq outside [1/M, 1]");
  sum_sq = std::clamp(sum_sq, 1.0 / M, 1.0);
  return std::log(1.0 + M * (sum_sq - 1.0 / M));
}

double delta_ee_lower(double pe, double integral_term) {
  if (!(integral_term > 0.0))
    throw std::domain_error("delta_ee_lower: integral term must be > 0");
  return fm_ee_lower(pe) - std::log(integral_term);
}

double mpe_upper_fm(double ee) {
  if (!(ee >= 0.0)) throw std::invalid_argument("mpe_upper_fm: ee must be >= 0");
  return 1.0 - std::exp(-ee);
}

double mpe_upper_lambda(double ee, double gee_lambda, double lambda) {
  if (!(lambda > 1.0))
    throw std::invalid_argument("mpe_upper_lambda: lambda must be > 1");
  if (gee_lambda > ee + 1e-9)
    throw std::invalid_argument("mpe_upper_lambda: GEE above EE");
  const double exponent = (1.0 - 1.0 / lambda) * ee + gee_lambda / lambda;
  return 1.0 - std::exp(-exponent);
}

double mpe_upper_integral(double gee_integral) {
  return 1.0 - std::exp(-gee_integral);
}

double mpe_upper_bn(double bn) { return 1.0 - std::exp(bn); }

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::EELower: return "EE-lower";
    case BoundKind::EEUpper: return "EE-upper";
    case BoundKind::MPEUpper: return "MPE-upper";
  }
  return "?";
}

}  // namespace equibound
