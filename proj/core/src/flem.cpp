#include "equibound/flem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equibound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

RingGeometry RingGeometry::regular(int s) {
  RingGeometry ring;
  ring.imager_angles.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i)
    ring.imager_angles.push_back(kTwoPi * static_cast<double>(i) / s);
  ring.validate();
  return ring;
}

void RingGeometry::validate() const {
  if (size() < 4) throw std::invalid_argument("RingGeometry: need S >= 4");
  for (int i = 0; i < size(); ++i) {
    const double a = imager_angles[static_cast<std::size_t>(i)];
    if (a < 0.0 || a >= kTwoPi)
      throw std::invalid_argument("RingGeometry: angles must lie in [0, 2 pi)");
    if (i > 0 && a <= imager_angles[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("RingGeometry: angles must be strictly increasing");
  }
}

double RingGeometry::obliquity(int s, double source_angle) const {
  return std::max(std::cos(imager_angles[static_cast<std::size_t>(s)] - source_angle), 0.0);
}

SpectralLibrary SpectralLibrary::standard(int k, int b) {
  if (k < 1 || b < 2)
    throw std::invalid_argument("SpectralLibrary: need K >= 1, B >= 2");
  // Base band profiles: one-hot per band, flat, up-ramp, down-ramp.
  std::vector<std::vector<double>> bases;
  for (int i = 0; i < b; ++i) {
    std::vector<double> one(static_cast<std::size_t>(b), 0.0);
    one[static_cast<std::size_t>(i)] = 1.0;
    bases.push_back(std::move(one));
  }
  std::vector<double> flat(static_cast<std::size_t>(b), 1.0 / b);
  bases.push_back(flat);
  std::vector<double> up(static_cast<std::size_t>(b)), down(static_cast<std::size_t>(b));
  double up_sum = 0.0;
  for (int i = 0; i < b; ++i) up_sum += static_cast<double>(i + 1);
  for (int i = 0; i < b; ++i) {
    up[static_cast<std::size_t>(i)] = static_cast<double>(i + 1) / up_sum;
    down[static_cast<std::size_t>(i)] = static_cast<double>(b - i) / up_sum;
  }
  bases.push_back(up);
  bases.push_back(down);

  // Signature j mixes base j with the flat profile at a j-dependent weight,
  // keeping rows unit-sum and pairwise distinct.
  SpectralLibrary lib;
  lib.traces.reserve(static_cast<std::size_t>(k));
  const std::size_t nb = bases.size();
  for (int j = 0; j < k; ++j) {
    const auto& base = bases[static_cast<std::size_t>(j) % nb];
    const double w = 1.0 - 0.5 * static_cast<double>(j / static_cast<int>(nb)) /
                               (1.0 + static_cast<double>(j / static_cast<int>(nb)));
    std::vector<double> trace(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i)
      trace[static_cast<std::size_t>(i)] =
          w * base[static_cast<std::size_t>(i)] + (1.0 - w) * flat[static_cast<std::size_t>(i)];
    lib.traces.push_back(std::move(trace));
  }
  lib.validate();
  return lib;
}

void SpectralLibrary::validate() const {
  if (traces.empty()) throw std::invalid_argument("SpectralLibrary: empty");
  for (const auto& row : traces) {
    if (row.size() != traces.front().size())
      throw std::invalid_argument("SpectralLibrary: ragged rows");
    double sum = 0.0;
    for (double v : row) {
      if (v < 0.0) throw std::invalid_argument("SpectralLibrary: negative weight");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("SpectralLibrary: rows must sum to 1");
  }
  for (std::size_t a = 0; a < traces.size(); ++a)
    for (std::size_t b = a + 1; b < traces.size(); ++b) {
      double diff = 0.0;
      for (std::size_t i = 0; i < traces[a].size(); ++i)
        diff = std::max(diff, std::abs(traces[a][i] - traces[b][i]));
      if (diff < 1e-9)
        throw std::invalid_argument("SpectralLibrary: duplicate traces");
    }
}

void FlemConfig::validate() const {
  if (!(psbr >= 0.0)) throw std::invalid_argument("FlemConfig: psbr must be >= 0");
  if (directions < 1 || signatures < 1)
    throw std::invalid_argument("FlemConfig: need directions, signatures >= 1");
  if (hypothesis_count() < 2)
    throw std::invalid_argument("FlemConfig: need D*K >= 2");
  if (bands < 2) throw std::invalid_argument("FlemConfig: need bands >= 2");
  if (imagers < 4) throw std::invalid_argument("FlemConfig: need imagers >= 4");
  if (!(read_noise_var >= 0.0) || !(bg_mean >= 0.0) || !(bg_fluctuation_frac >= 0.0))
    throw std::invalid_argument("FlemConfig: negative noise parameter");
  if (read_noise_var + bg_fluctuation_frac * bg_mean <= 0.0)
    throw std::invalid_argument("FlemConfig: zero total noise variance");
  if (!prior.empty() && static_cast<int>(prior.size()) != hypothesis_count())
    throw std::invalid_argument("FlemConfig: prior length must equal D*K");
}

HypothesisModel build_model(const FlemConfig& config) {
  config.validate();
  const RingGeometry ring = RingGeometry::regular(config.imagers);
  const SpectralLibrary lib = SpectralLibrary::standard(config.signatures, config.bands);

  // Source angles: equally spaced, offset half an imager step so no
  // direction coincides with an imager normal.
  std::vector<double> directions(static_cast<std::size_t>(config.directions));
  for (int d = 0; d < config.directions; ++d)
    directions[static_cast<std::size_t>(d)] =
        kTwoPi * static_cast<double>(d) / config.directions +
        std::numbers::pi / config.imagers;

  const double s_peak = config.psbr * config.bg_mean;
  const double bg_sigma = config.bg_fluctuation_frac * config.bg_mean;
  const double variance = config.read_noise_var + bg_sigma * bg_sigma;

  const int n = config.imagers * config.bands;
  std::vector<std::vector<double>> means;
  means.reserve(static_cast<std::size_t>(config.hypothesis_count()));
  for (int d = 0; d < config.directions; ++d) {
    for (int k = 0; k < config.signatures; ++k) {
      std::vector<double> mu(static_cast<std::size_t>(n));
      for (int s = 0; s < config.imagers; ++s) {
        const double response = ring.obliquity(s, directions[static_cast<std::size_t>(d)]);
        for (int b = 0; b < config.bands; ++b)
          mu[static_cast<std::size_t>(s * config.bands + b)] =
              config.bg_mean +
              s_peak * response * lib.traces[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)];
      }
      means.push_back(std::move(mu));
    }
  }

  HypothesisModel model;
  model.prior = config.prior.empty() ? Prior::uniform(config.hypothesis_count())
                                     : Prior{config.prior};
  model.channel = std::make_shared<GaussianChannel>(std::move(means), variance);
  model.validate();
  return model;
}

std::vector<SweepPoint> psbr_sweep(const FlemConfig& config,
                                   const std::vector<double>& psbr_values,
                                   std::size_t samples, std::uint64_t seed,
                                   const ReportConfig& report_config) {
  if (psbr_values.empty())
    throw std::invalid_argument("psbr_sweep: empty PSBR list");
  std::vector<SweepPoint> points;
  points.reserve(psbr_values.size());
  for (double psbr : psbr_values) {
    FlemConfig point_config = config;
    point_config.psbr = psbr;
    const HypothesisModel model = build_model(point_config);
    const SampleBatch batch = sample_joint(model, samples, seed);
    points.push_back({psbr, assemble_report(batch, report_config)});
  }
  return points;
}

}  // namespace equibound
