#pragma once

#include <cstdint>
#include <vector>

#include "equibound/bounds.hpp"
#include "equibound/channel.hpp"

namespace equibound {

/// Ring of S radially oriented single-pixel imagers. The response to a
/// source at angle phi is cos(angle_s - phi) clamped at 0.
struct RingGeometry {
  std::vector<double> imager_angles;  // strictly increasing in [0, 2 pi)

  int size() const { return static_cast<int>(imager_angles.size()); }

  static RingGeometry regular(int s);

  void validate() const;  // S >= 4, strictly increasing in [0, 2 pi)

  double obliquity(int s, double source_angle) const;
};

/// K spectral signatures over B bands; each row is nonnegative with unit sum.
struct SpectralLibrary {
  std::vector<std::vector<double>> traces;

  int signatures() const { return static_cast<int>(traces.size()); }
  int bands() const { return traces.empty() ? 0 : static_cast<int>(traces.front().size()); }

  /// K deterministic distinct unit-sum traces over B bands, mixed from
  /// one-hot, flat, and ramp band profiles.
  static SpectralLibrary standard(int k, int b);

  void validate() const;
};

/// Scenario parameters for the ring-of-imagers flash model.
struct FlemConfig {
  double psbr = 1.0;             ///< peak signal-to-background ratio
  int directions = 4;            ///< D candidate source angles
  int signatures = 8;            ///< K spectral signatures
  int bands = 4;                 ///< B spectral bands
  int imagers = 16;              ///< S ring imagers
  double read_noise_var = 25.0;  ///< electron^2
  double bg_mean = 10.0;         ///< electrons
  double bg_fluctuation_frac = 0.5;
  std::vector<double> prior;     ///< empty = uniform over D*K

  int hypothesis_count() const { return directions * signatures; }

  void validate() const;

  friend bool operator==(const FlemConfig&, const FlemConfig&) = default;
};

/// Builds the M = D*K hypothesis Gaussian model with output dimension
/// N = S*B. The mean for hypothesis (direction d, signature k) at imager s,
/// band b is bg_mean + psbr*bg_mean * max(cos(alpha_s - phi_d), 0) *
/// trace_k(b); sigma^2 = read_noise_var + (bg_fluctuation_frac*bg_mean)^2.
HypothesisModel build_model(const FlemConfig& config);

struct SweepPoint {
  double psbr = 0.0;
  Report report;
};

/// One assemble_report per PSBR value; deterministic per seed.
std::vector<SweepPoint> psbr_sweep(const FlemConfig& config,
                                   const std::vector<double>& psbr_values,
                                   std::size_t samples, std::uint64_t seed,
                                   const ReportConfig& report_config = {});

}  // namespace equibound
