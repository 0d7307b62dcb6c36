#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "equibound/bounds.hpp"

namespace equibound {

namespace {

bool is_uniform(const Prior& prior) {
  const auto [lo, hi] = std::minmax_element(prior.p.begin(), prior.p.end());
  return *hi - *lo < 1e-12;
}

// Guarded central difference for error propagation through a scalar map.
double diff_se(const std::function<double(double)>& f, double x, double se) {
  if (se <= 0.0) return 0.0;
  const double h = std::max(1e-7, se * 0.01);
  double lo = 0.0, hi = 0.0;
  try {
    hi = f(x + h);
    lo = f(x - h);
  } catch (...) {
    return se;  // boundary; fall back to the raw input error
  }
  const double d = (hi - lo) / (2.0 * h);
  return std::isfinite(d) ? std::abs(d) * se : se;
}

}  // namespace

Report assemble_report(const SampleBatch& batch, const ReportConfig& config) {
  const int M = batch.hypothesis_count();
  const int depth = std::clamp(config.depth, 1, M - 1);
  const double lambda = config.lambda;

  Report report;
  report.prior_entropy_nats = prior_entropy(batch.model.prior);
  report.equivocation = estimate_equivocation(batch);
  report.mi = estimate_mi(batch);
  report.mpe = estimate_mpe(batch);
  report.stats = estimate_ordered_stats(batch, depth);

  const double pe = report.mpe.mean;
  const double se_pe = report.mpe.std_error;
  const OrderedStats& st = report.stats;

  auto emit = [&](const std::string& name, BoundKind kind,
                  const std::function<void(BoundReport&)>& eval) {
    BoundReport row;
    row.name = name;
    row.kind = kind;
    try {
      eval(row);
      if (!std::isfinite(row.value)) {
        row.failed = true;
        row.flags.push_back("non-finite");
      }
    } catch (const std::exception& e) {
      row.failed = true;
      row.flags.push_back(e.what());
    }
    report.rows.push_back(std::move(row));
  };

  // EE upper bounds.
  emit("Fano", BoundKind::EEUpper, [&](BoundReport& row) {
    row.value = fano_ee_upper(pe, M);
    row.std_error = diff_se([&](double p) { return fano_ee_upper(p, M); }, pe, se_pe);
  });
  emit("Fano1", BoundKind::EEUpper, [&](BoundReport& row) {
    row.value = fano1_ee_upper(pe, st.v.mean, M);
    row.std_error =
        diff_se([&](double p) { return fano1_ee_upper(p, std::min(st.v.mean, p), M); }, pe, se_pe) +
        diff_se([&](double d) { return fano1_ee_upper(pe, d, M); }, st.v.mean, st.v.std_error);
  });
  if (M >= 3) {
    emit("Fano2", BoundKind::EEUpper, [&](BoundReport& row) {
      row.value = fano2_ee_upper(pe, st.v.mean, st.w.mean, M);
      row.std_error =
          diff_se([&](double p) { return fano2_ee_upper(p, st.v.mean, st.w.mean, M); }, pe, se_pe) +
          diff_se([&](double d) { return fano2_ee_upper(pe, d, st.w.mean, M); }, st.v.mean, st.v.std_error) +
          diff_se([&](double d) { return fano2_ee_upper(pe, st.v.mean, d, M); }, st.w.mean, st.w.std_error);
    });
  }

  // EE lower bounds.
  emit("FMB", BoundKind::EELower, [&](BoundReport& row) {
    row.value = fm_ee_lower(pe);
    row.std_error = se_pe / std::max(1.0 - pe, 1e-300);
  });
  emit("CFMB", BoundKind::EELower, [&](BoundReport& row) {
    bool clamped = false;
    row.value = cfm_phi_star(pe, M, &clamped);
    if (clamped) row.flags.push_back("clamped");
    row.std_error = diff_se([&](double p) { return cfm_phi_star(p, M); }, pe, se_pe);
  });
  for (int n = 1; n <= std::min(depth, 2); ++n) {
    emit("FMB" + std::to_string(n), BoundKind::EELower, [&](BoundReport& row) {
      std::vector<double> deltas;
      double se_sum = se_pe;
      for (int i = 0; i < n; ++i) {
        deltas.push_back(st.deltas[static_cast<std::size_t>(i)].mean);
        se_sum += st.deltas[static_cast<std::size_t>(i)].std_error;
      }
      row.value = fmbn_ee_lower(pe, deltas);
      double arg = 1.0 - pe;
      for (double d : deltas) arg -= d;
      row.std_error = se_sum / std::max(arg, 1e-300);
    });
  }
  emit("FMp*p**", BoundKind::EELower, [&](BoundReport& row) {
    const FmTwoEstimate est = fm_two_bound(batch);
    row.value = est.value.mean;
    row.std_error = est.value.std_error;
    if (est.projected > 0) {
      row.flags.push_back("projected=" + std::to_string(est.projected));
      if (static_cast<double>(est.projected) > 1e-4 * static_cast<double>(batch.count()))
        row.flags.push_back("unreliable");
    }
  });
  emit("CFMp*p**", BoundKind::EELower, [&](BoundReport& row) {
    const double u = 1.0 - pe;
    const double v = st.v.mean;
    row.value = convex_phi(u, v, M);
    auto safe = [&](double uu, double vv) {
      uu = std::clamp(uu, 0.0, 1.0);
      vv = std::clamp(vv, 0.0, std::min(uu, 1.0 - uu));
      return convex_phi(uu, vv, M);
    };
    row.std_error = diff_se([&](double uu) { return safe(uu, v); }, u, se_pe) +
                    diff_se([&](double vv) { return safe(u, vv); }, v, st.v.std_error);
  });
  emit("CapacityBound", BoundKind::EELower, [&](BoundReport& row) {
    const double mi_upper = capacity_mi_upper(st.sum_sq.mean, M, is_uniform(batch.model.prior));
    row.value = report.prior_entropy_nats - mi_upper;  // equals -ln E[sum p^2]
    row.std_error = st.sum_sq.std_error / std::max(st.sum_sq.mean, 1e-300);
  });
  emit("DeltaBound", BoundKind::EELower, [&](BoundReport& row) {
    const DeltaIntegralEstimate integral = estimate_delta_integral(batch);
    row.value = delta_ee_lower(pe, integral.value.mean);
    row.std_error = se_pe / std::max(1.0 - pe, 1e-300) +
                    integral.value.std_error / std::max(integral.value.mean, 1e-300);
    if (integral.excluded > 0)
      row.flags.push_back("excluded=" + std::to_string(integral.excluded));
    if (integral.unreliable) row.flags.push_back("unreliable");
  });

  // MPE upper bounds.
  const double ee = report.equivocation.mean;
  const double se_ee = report.equivocation.std_error;
  emit("MPE-FM", BoundKind::MPEUpper, [&](BoundReport& row) {
    row.value = mpe_upper_fm(std::max(ee, 0.0));
    row.std_error = std::exp(-std::max(ee, 0.0)) * se_ee;
  });
  emit("MPE-lambda", BoundKind::MPEUpper, [&](BoundReport& row) {
    const MCEstimate gee = estimate_gee(batch, lambda);
    const double exponent = (1.0 - 1.0 / lambda) * ee + gee.mean / lambda;
    row.value = mpe_upper_lambda(std::max(ee, 0.0), std::min(gee.mean, ee), lambda);
    row.std_error = std::exp(-exponent) *
                    ((1.0 - 1.0 / lambda) * se_ee + gee.std_error / lambda);
  });
  emit("MPE-Integral", BoundKind::MPEUpper, [&](BoundReport& row) {
    const MCEstimate integral = estimate_gee_integral(batch);
    row.value = mpe_upper_integral(integral.mean);
    row.std_error = std::exp(-integral.mean) * integral.std_error;
  });
  emit("MPE-Bn", BoundKind::MPEUpper, [&](BoundReport& row) {
    const MCEstimate bn = estimate_bn(batch, lambda);
    row.value = mpe_upper_bn(bn.mean);
    row.std_error = std::exp(bn.mean) * bn.std_error;
  });

  return report;
}

}  // namespace equibound
