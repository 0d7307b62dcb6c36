#include <doctest.h>

#include <cmath>
#include <numbers>

#include "equibound/estimators.hpp"
#include "equibound/flem.hpp"

using namespace equibound;

TEST_CASE("ring geometry") {
  const RingGeometry ring = RingGeometry::regular(16);
  CHECK(ring.size() == 16);
  CHECK(ring.imager_angles[0] == 0.0);
  CHECK(ring.imager_angles[8] == doctest::Approx(std::numbers::pi).epsilon(1e-12));

  // Response depends only on the angle difference; a common rotation of
  // imager and source cancels.
  for (double base : {0.3, 1.7, 4.0}) {
    for (double rot : {0.0, 0.5, 2.1}) {
      RingGeometry a;
      a.imager_angles = {base};
      RingGeometry b;
      b.imager_angles = {base + rot};
      CHECK(a.obliquity(0, 1.0) == doctest::Approx(b.obliquity(0, 1.0 + rot)).epsilon(1e-12));
    }
  }
  // Back-facing imagers see nothing.
  CHECK(ring.obliquity(8, 0.0) == 0.0);
  CHECK(ring.obliquity(0, 0.0) == 1.0);

  CHECK_THROWS_AS((void)RingGeometry::regular(3), std::invalid_argument);
}

TEST_CASE("spectral library") {
  const SpectralLibrary lib = SpectralLibrary::standard(8, 4);
  CHECK(lib.signatures() == 8);
  CHECK(lib.bands() == 4);
  for (const auto& row : lib.traces) {
    double sum = 0.0;
    for (double v : row) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Pairwise distinct (validate() enforces this; double-check directly).
  for (std::size_t a = 0; a < lib.traces.size(); ++a)
    for (std::size_t b = a + 1; b < lib.traces.size(); ++b)
      CHECK(lib.traces[a] != lib.traces[b]);
}

TEST_CASE("flash model construction") {
  FlemConfig cfg;
  const HypothesisModel model = build_model(cfg);
  CHECK(model.hypothesis_count() == 32);
  CHECK(model.channel->output_dim() == 64);
  CHECK(prior_entropy(model.prior) ==
        doctest::Approx(5.0 * std::log(2.0)).epsilon(1e-12));

  const auto* channel = dynamic_cast<const GaussianChannel*>(model.channel.get());
  REQUIRE(channel != nullptr);
  CHECK(channel->variance() == doctest::Approx(50.0).epsilon(1e-12));

  // Per-imager band sums: excess over background equals
  // s_peak * obliquity for every hypothesis (unit-sum traces).
  const RingGeometry ring = RingGeometry::regular(cfg.imagers);
  const double s_peak = cfg.psbr * cfg.bg_mean;
  for (int d = 0; d < cfg.directions; ++d) {
    const double phi = 2.0 * std::numbers::pi * d / cfg.directions +
                       std::numbers::pi / cfg.imagers;
    for (int k = 0; k < cfg.signatures; ++k) {
      const auto& mu = channel->means()[static_cast<std::size_t>(d * cfg.signatures + k)];
      for (int s = 0; s < cfg.imagers; ++s) {
        double excess = 0.0;
        for (int b = 0; b < cfg.bands; ++b)
          excess += mu[static_cast<std::size_t>(s * cfg.bands + b)] - cfg.bg_mean;
        REQUIRE(excess ==
                doctest::Approx(s_peak * ring.obliquity(s, phi)).epsilon(1e-9));
      }
    }
  }

  // No source direction coincides with an imager normal.
  for (int d = 0; d < cfg.directions; ++d) {
    const double phi = 2.0 * std::numbers::pi * d / cfg.directions +
                       std::numbers::pi / cfg.imagers;
    for (double a : ring.imager_angles)
      CHECK(std::abs(std::remainder(a - phi, 2.0 * std::numbers::pi)) > 1e-6);
  }
}

TEST_CASE("zero flash strength is non-informative") {
  FlemConfig cfg;
  cfg.psbr = 0.0;
  const SampleBatch batch = sample_joint(build_model(cfg), 500, 0);
  const MCEstimate mi = estimate_mi(batch);
  CHECK(std::abs(mi.mean) < 1e-10);
}

TEST_CASE("mutual information grows with flash strength") {
  FlemConfig cfg;
  std::vector<double> mi_values;
  for (double psbr : {0.5, 2.0, 10.0}) {
    cfg.psbr = psbr;
    mi_values.push_back(estimate_mi(sample_joint(build_model(cfg), 4000, 7)).mean);
  }
  CHECK(mi_values[0] < mi_values[1]);
  CHECK(mi_values[1] < mi_values[2]);
  CHECK(mi_values[2] < 5.0 * std::log(2.0) + 1e-9);
}

TEST_CASE("psbr sweep structure") {
  FlemConfig cfg;
  const auto points = psbr_sweep(cfg, {0.5, 2.0}, 500, 3, ReportConfig{2, 2.0});
  REQUIRE(points.size() == 2);
  CHECK(points[0].psbr == 0.5);
  CHECK(points[1].psbr == 2.0);
  for (const auto& point : points) {
    CHECK(point.report.prior_entropy_nats ==
          doctest::Approx(5.0 * std::log(2.0)).epsilon(1e-12));
    CHECK_FALSE(point.report.rows.empty());
  }
  // Sweep points reuse the seed: a direct run at the same PSBR matches.
  FlemConfig at_half = cfg;
  at_half.psbr = 0.5;
  const Report direct =
      assemble_report(sample_joint(build_model(at_half), 500, 3), ReportConfig{2, 2.0});
  CHECK(direct.equivocation.mean == points[0].report.equivocation.mean);
  CHECK_THROWS_AS((void)psbr_sweep(cfg, {}, 10, 0), std::invalid_argument);
}

TEST_CASE("config validation") {
  FlemConfig cfg;
  cfg.psbr = -1.0;
  CHECK_THROWS_AS((void)cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.imagers = 3;
  CHECK_THROWS_AS((void)cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.prior = {0.5, 0.5};  // wrong length for M = 32
  CHECK_THROWS_AS((void)cfg.validate(), std::invalid_argument);
}
