#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equibound/flem.hpp"

namespace equibound {

enum class ModelKind { Flem, Gaussian, Replay };
enum class OutputFormat { Csv, Json };
enum class Units { Bits, Nats };

/// Explicit Gaussian model spec (any N, any M).
struct GaussianSpec {
  std::vector<double> prior;
  std::vector<std::vector<double>> means;
  double variance = 1.0;

  friend bool operator==(const GaussianSpec&, const GaussianSpec&) = default;
};

/// Fixed posterior list replayed cyclically; used for oracle-style runs.
struct ReplaySpec {
  std::vector<double> prior;
  std::vector<std::vector<double>> posteriors;

  friend bool operator==(const ReplaySpec&, const ReplaySpec&) = default;
};

/// Parsed run configuration. Exactly one model spec is present.
struct RunConfig {
  ModelKind kind = ModelKind::Flem;
  FlemConfig flem;
  GaussianSpec gaussian;
  ReplaySpec replay;

  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  int depth = 0;  // 0 = default min(M-1, 8)
  double lambda = 2.0;
  OutputFormat format = OutputFormat::Csv;
  Units units = Units::Bits;
  std::vector<double> psbr;  // sweep grid (flem only)

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a JSON configuration document. Unknown keys are rejected;
/// diagnostics name the offending key path.
RunConfig parse_config(const std::string& text);

/// Canonical JSON rendering; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

/// Builds the batch described by the config (model + samples + seed).
SampleBatch make_batch(const RunConfig& config);

/// Effective ordered-stats depth / lambda for a model with M hypotheses.
ReportConfig report_config(const RunConfig& config, int M);

}  // namespace equibound
