#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "equibound/bounds.hpp"
#include "equibound/sampling.hpp"

using namespace equibound;

namespace {

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double entropy(std::initializer_list<double> p) {
  double h = 0.0;
  for (double v : p) h -= xlnx(v);
  return h;
}

std::vector<double> random_sorted_posterior(std::mt19937_64& gen, int m) {
  std::exponential_distribution<double> exp_dist(1.0);
  std::vector<double> p(static_cast<std::size_t>(m));
  double sum = 0.0;
  for (double& v : p) sum += (v = exp_dist(gen) + 1e-9);
  for (double& v : p) v /= sum;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

}  // namespace

TEST_CASE("Fano family point values") {
  CHECK(fano_ee_upper(0.0, 5) == 0.0);
  CHECK(fano_ee_upper(0.5, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(fano_ee_upper(0.5, 5) ==
        doctest::Approx(std::log(2.0) + 0.5 * std::log(4.0)).epsilon(1e-12));

  // M = 2 forces dp1 = pe and the bound reduces to the binary entropy.
  CHECK(fano1_ee_upper(0.3, 0.3, 2) ==
        doctest::Approx(entropy({0.7, 0.3})).epsilon(1e-12));
  CHECK(fano1_ee_upper(0.0, 0.0, 4) == 0.0);
  CHECK(fano1_ee_upper(0.4, 0.25, 4) == doctest::Approx(1.04161).epsilon(1e-4));
  CHECK(fano_ee_upper(0.4, 4) == doctest::Approx(1.11246).epsilon(1e-4));
  CHECK(fano1_ee_upper(0.4, 0.25, 4) < fano_ee_upper(0.4, 4));

  // M = 3 forces dp2 = pe - dp1: ternary-entropy form.
  CHECK(fano2_ee_upper(0.4, 0.25, 0.15, 3) ==
        doctest::Approx(entropy({0.6, 0.25, 0.15})).epsilon(1e-10));
  CHECK(fano2_ee_upper(0.4, 0.25, 0.15, 3) == doctest::Approx(0.93764).epsilon(1e-4));
}

TEST_CASE("Fano chain ordering on random admissible statistics") {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 3 + trial % 6;
    const std::vector<double> p = random_sorted_posterior(gen, m);
    const double pe = 1.0 - p[0];
    const double dp1 = p[1];
    const double dp2 = p[2];
    const double f0 = fano_ee_upper(pe, m);
    const double f1 = fano1_ee_upper(pe, dp1, m);
    const double f2 = fano2_ee_upper(pe, dp1, dp2, m);
    REQUIRE(f2 <= f1 + 1e-12);
    REQUIRE(f1 <= f0 + 1e-12);
    REQUIRE(f2 >= 0.0);
  }
}

TEST_CASE("FM bound and its convexification") {
  CHECK(fm_ee_lower(0.0) == 0.0);
  CHECK(fm_ee_lower(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  CHECK(cfm_phi_star(0.0, 8) == 0.0);
  CHECK(cfm_phi_star(0.5, 8) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(cfm_phi_star(2.0 / 3.0, 8) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  // Segment knots coincide with -ln(1-pe); the linear pieces lie above it.
  for (int k = 1; k < 6; ++k) {
    const double knot = 1.0 - 1.0 / (k + 1.0);
    CHECK(cfm_phi_star(knot, 6) == doctest::Approx(-std::log(1.0 - knot)).epsilon(1e-12));
  }
  for (int i = 0; i <= 10000; ++i) {
    const double pe = (5.0 / 6.0) * i / 10000.0;
    REQUIRE(cfm_phi_star(pe, 6) >= fm_ee_lower(pe) - 1e-12);
  }
  bool clamped = false;
  (void)cfm_phi_star(0.95, 6, &clamped);
  CHECK(clamped);
}

TEST_CASE("delta-tightened FM bound") {
  CHECK(fmbn_ee_lower(0.5, {}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(fmbn_ee_lower(0.5, {0.1}) == doctest::Approx(-std::log(0.4)).epsilon(1e-12));
  CHECK(fmbn_ee_lower(0.5, {0.1, 0.05}) >= fmbn_ee_lower(0.5, {0.1}));
  CHECK_THROWS_AS((void)fmbn_ee_lower(0.9, {0.2}), std::domain_error);
  CHECK_THROWS_AS((void)fmbn_ee_lower(0.5, {-0.2}), std::invalid_argument);
}

TEST_CASE("two-posterior bound phi(u, v)") {
  CHECK(phi_two(1.0, 0.0, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(phi_two(0.5, 0.5, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(phi_two(0.6, 0.3, 4) == doctest::Approx(entropy({0.6, 0.3, 0.1})).epsilon(1e-10));
  CHECK(phi_two(0.6, 0.3, 4) == doctest::Approx(0.89795).epsilon(1e-4));
  CHECK(phi_two(1.0 / 3.0, 1.0 / 3.0, 5) == doctest::Approx(std::log(3.0)).epsilon(1e-12));

  SUBCASE("branch formulas agree on the boundaries") {
    // On v = (1-u)/(n+1) the branch-n and branch-(n+1) closed forms coincide.
    const int M = 8;
    for (double u : {0.35, 0.5, 0.7, 0.9}) {
      for (int n = 1; n <= M - 3; ++n) {
        const double v = (1.0 - u) / (n + 1.0);
        if (v > u) continue;
        auto branch = [&](int k) {
          return -xlnx(u) - xlnx(k * v) - xlnx(1.0 - u - k * v) + k * v * std::log(double(k));
        };
        REQUIRE(std::abs(branch(n) - branch(n + 1)) < 1e-10);
        REQUIRE(std::abs(phi_two(u, v, M) - branch(n)) < 1e-10);
      }
    }
  }

  SUBCASE("numerical continuity across branch switches") {
    const int M = 8;
    for (double u : {0.4, 0.55, 0.8}) {
      for (int n = 1; n <= M - 3; ++n) {
        const double v = (1.0 - u) / (n + 1.0);
        if (v > u) continue;
        const double lo = phi_two(u, v - 1e-12, M);
        const double hi = phi_two(u, v + 1e-12, M);
        REQUIRE(std::abs(hi - lo) < 1e-9);
      }
    }
  }

  SUBCASE("points below the M-feasible edge are projected") {
    bool projected = false;
    const double val = phi_two(0.4, 0.01, 4, &projected);
    CHECK(projected);
    CHECK(val == doctest::Approx(phi_two(0.4, 0.6 / 3.0, 4)).epsilon(1e-12));
  }
}

TEST_CASE("fm_two_bound expectation over a batch") {
  SUBCASE("deterministic posteriors give 0") {
    const SampleBatch batch =
        SampleBatch::replay(Prior::uniform(2), {{1.0, 0.0}}, 10);
    CHECK(fm_two_bound(batch).value.mean == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("uniform binary posteriors give ln 2") {
    const SampleBatch batch =
        SampleBatch::replay(Prior::uniform(2), {{0.5, 0.5}}, 10);
    CHECK(fm_two_bound(batch).value.mean == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
  SUBCASE("three-hypothesis replay matches the closed form") {
    const SampleBatch batch =
        SampleBatch::replay(Prior::uniform(3), {{0.6, 0.3, 0.1}}, 10);
    const FmTwoEstimate est = fm_two_bound(batch);
    CHECK(est.value.mean == doctest::Approx(entropy({0.6, 0.3, 0.1})).epsilon(1e-10));
    CHECK(est.projected == 0);
  }
}

TEST_CASE("convex minorant Phi(u, v)") {
  CHECK(convex_phi(1.0, 0.0, 6) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(convex_phi(0.5, 0.5, 6) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(convex_phi(0.75, 0.25, 6) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  for (int k = 2; k <= 6; ++k)
    CHECK(convex_phi(1.0 / k, 1.0 / k, 6) == doctest::Approx(std::log(double(k))).epsilon(1e-12));

  SUBCASE("diagonal restriction is convex") {
    const int M = 8;
    std::vector<double> vals;
    for (int i = 0; i <= 1000; ++i) {
      const double t = 1.0 / M + (0.5 - 1.0 / M) * i / 1000.0;
      vals.push_back(convex_phi(t, t, M));
    }
    for (std::size_t i = 1; i + 1 < vals.size(); ++i)
      REQUIRE(vals[i + 1] - 2.0 * vals[i] + vals[i - 1] >= -1e-12);
  }

  SUBCASE("Phi minorizes phi on the feasible region") {
    const int M = 6;
    for (int i = 1; i <= 200; ++i) {
      const double u = i / 200.0;
      const double v_lo = (1.0 - u) / (M - 1);
      const double v_hi = std::min(u, 1.0 - u);
      if (v_hi < v_lo) continue;
      for (int j = 0; j <= 50; ++j) {
        const double v = v_lo + (v_hi - v_lo) * j / 50.0;
        REQUIRE(convex_phi(u, v, M) <= phi_two(u, v, M) + 1e-10);
      }
    }
  }

  SUBCASE("Phi evaluated at (1-pe, v) dominates phi*(pe)") {
    const int M = 6;
    for (int i = 0; i <= 200; ++i) {
      const double pe = (1.0 - 1.0 / M) * i / 200.0;
      const double u = 1.0 - pe;
      const double v_lo = pe / (M - 1);
      const double v_hi = std::min(u, pe);
      for (int j = 0; j <= 20; ++j) {
        const double v = v_lo + (v_hi - v_lo) * j / 20.0;
        REQUIRE(convex_phi(u, v, M) >= cfm_phi_star(pe, M) - 1e-10);
      }
    }
  }
}

TEST_CASE("capacity-style MI upper bound") {
  CHECK(capacity_mi_upper(1.0 / 4.0, 4, true) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(capacity_mi_upper(1.0, 4, true) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(capacity_mi_upper(0.68, 2, true) == doctest::Approx(std::log(1.36)).epsilon(1e-12));
  CHECK_THROWS_AS((void)capacity_mi_upper(0.68, 2, false), std::invalid_argument);
}

TEST_CASE("decision-region lower bound forms") {
  CHECK(delta_ee_lower(0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(delta_ee_lower(0.5, 0.6) ==
        doctest::Approx(std::log(2.0) + std::log(5.0 / 3.0)).epsilon(1e-12));
  // Cross-term form: integral = (1 - pe) + cross.
  const double pe = 0.3, integral = 0.85;
  const double cross = integral - (1.0 - pe);
  CHECK(delta_ee_lower(pe, (1.0 - pe) + cross) ==
        doctest::Approx(delta_ee_lower(pe, integral)).epsilon(1e-12));
  CHECK_THROWS_AS((void)delta_ee_lower(0.5, 0.0), std::domain_error);
}

TEST_CASE("MPE upper bounds") {
  CHECK(mpe_upper_fm(0.0) == 0.0);
  CHECK(mpe_upper_fm(std::log(4.0)) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(mpe_upper_lambda(std::log(4.0), std::log(4.0), 2.0) ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(mpe_upper_integral(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mpe_upper_bn(std::log(0.8)) == doctest::Approx(0.2).epsilon(1e-12));
  // Chain: integral form <= lambda form <= FM form for one posterior.
  const SampleBatch batch =
      SampleBatch::replay(Prior::uniform(2), {{0.8, 0.2}}, 10);
  const double ee = estimate_equivocation(batch).mean;
  const double g2 = estimate_gee(batch, 2.0).mean;
  const double gi = estimate_gee_integral(batch).mean;
  const double m_int = mpe_upper_integral(gi);
  const double m_l2 = mpe_upper_lambda(ee, g2, 2.0);
  const double m_fm = mpe_upper_fm(ee);
  CHECK(m_int <= m_l2 + 1e-12);
  CHECK(m_l2 <= m_fm + 1e-12);
  CHECK(m_int == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("bound kind labels") {
  CHECK(std::string(to_string(BoundKind::EELower)) == "EE-lower");
  CHECK(std::string(to_string(BoundKind::EEUpper)) == "EE-upper");
  CHECK(std::string(to_string(BoundKind::MPEUpper)) == "MPE-upper");
}
