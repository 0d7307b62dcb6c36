#pragma once

#include <string>
#include <vector>

#include "equibound/estimators.hpp"

namespace equibound {

// ---------------------------------------------------------------------------
// Equivocation upper bounds (=> MI lower bounds)
// ---------------------------------------------------------------------------

/// Fano bound: H(pe) + pe ln(M-1), nats.
double fano_ee_upper(double pe, int M);

/// First-order tightened Fano bound using dp1 = E[p**].
/// -(1-pe)ln(1-pe) - dp1 ln dp1 - (pe-dp1)[ln(pe-dp1) - ln(M-2)],
/// with 0 ln 0 = 0 and the ln(M-2) term 0 when pe = dp1 (covers M = 2).
double fano1_ee_upper(double pe, double dp1, int M);

/// Second-order tightened Fano bound using dp1 = E[p**] and dp2 = E[p***].
double fano2_ee_upper(double pe, double dp1, double dp2, int M);

// ---------------------------------------------------------------------------
// Equivocation lower bounds (=> MI upper bounds)
// ---------------------------------------------------------------------------

/// Feder-Merhav bound: -ln(1 - pe).
double fm_ee_lower(double pe);

/// Piecewise-linear convex FM bound phi*(u), segments n = 1..M-1 with
/// a_n = n(n+1) ln((n+1)/n), b_n = ln n. u is the MPE. Values of u above
/// (M-1)/M (beyond tolerance) are clamped; *clamped is set when non-null.
double cfm_phi_star(double u, int M, bool* clamped = nullptr);

/// Tightened FM bound: -ln(1 - pe - sum(deltas)). Empty deltas reduces to
/// fm_ee_lower. Throws std::domain_error when the argument is <= 0
/// (inconsistent statistics).
double fmbn_ee_lower(double pe, const std::vector<double>& deltas);

/// Two-posterior refined FM bound phi(u, v) for u = p*, v = p**, given M
/// hypotheses. Branch n satisfies (1-u)/(n+1) <= v <= min(u, (1-u)/n);
/// value is h(u, nv) + n v ln n with h the ternary entropy. Points below
/// the M-feasible edge v = (1-u)/(M-1) evaluate at that edge; *projected is
/// set when a point had to be moved (beyond tolerance).
double phi_two(double u, double v, int M, bool* projected = nullptr);

/// E_X[phi(p*(X), p**(X))] over a batch: the FMp*p** bound.
struct FmTwoEstimate {
  MCEstimate value;
  std::size_t projected = 0;  ///< draws moved to the nearest admissible point
};
FmTwoEstimate fm_two_bound(const SampleBatch& batch);

/// Piecewise-linear convex minorant Phi(u, v) over the allowed triangle
/// v <= min(u, 1-u): fan triangulation from A = (1,0) over the diagonal
/// vertices (1/k, 1/k), k = 2..M, closed to O = (0,0) by extending the last
/// segment. Evaluated at (1 - MPE, E[p**]) this is the CFMp*p** bound.
double convex_phi(double u, double v, int M);

/// Uniform-prior capacity-style MI upper bound ln(1 + M (sum_sq - 1/M)).
/// Throws std::invalid_argument unless the prior is uniform (use
/// fmbn_ee_lower at full depth for the general -ln E[sum p^2] form).
double capacity_mi_upper(double sum_sq, int M, bool prior_is_uniform);

/// Delta bound on EE: -ln(1-pe) - ln(integral_term), where integral_term is
/// the decision-region integral from estimate_delta_integral.
double delta_ee_lower(double pe, double integral_term);

// ---------------------------------------------------------------------------
// MPE upper bounds
// ---------------------------------------------------------------------------

/// 1 - exp(-EE): the FM form of the MPE bound.
double mpe_upper_fm(double ee);

/// 1 - exp(-[(1-1/lambda) EE + (1/lambda) H_lambda]); lambda = 2 is the
/// default reported order.
double mpe_upper_lambda(double ee, double gee_lambda, double lambda);

/// 1 - exp(-integral of H_n/n^2); equals 1 - exp(B_inf).
double mpe_upper_integral(double gee_integral);

/// 1 - exp(B_n) for a tilted-posterior bound value B_n.
double mpe_upper_bn(double bn);

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

enum class BoundKind { EELower, EEUpper, MPEUpper };

/// One named bound with its value (nats for entropy bounds, probability for
/// MPE bounds), propagated error bar, and quality flags.
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::EELower;
  double value = 0.0;
  double std_error = 0.0;
  std::vector<std::string> flags;
  bool failed = false;
};

struct ReportConfig {
  int depth = 8;        ///< ordered-stats depth, clamped to M-1
  double lambda = 2.0;  ///< order for the MPE-lambda / MPE-Bn bounds
};

/// Exact estimates plus the full bound catalog for one batch.
struct Report {
  double prior_entropy_nats = 0.0;
  MCEstimate equivocation;
  MCEstimate mi;
  MCEstimate mpe;
  OrderedStats stats;
  std::vector<BoundReport> rows;
};

/// Evaluates every bound for the batch. Rows whose inputs are invalid are
/// flagged and marked failed rather than aborting the report.
Report assemble_report(const SampleBatch& batch, const ReportConfig& config);

const char* to_string(BoundKind kind);

}  // namespace equibound
