#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "equibound/posterior.hpp"

using namespace equibound;

namespace {

// Channel returning -inf everywhere; exercises the degenerate-input path.
struct ImpossibleChannel final : ChannelDensity {
  int hypothesis_count() const override { return 2; }
  int output_dim() const override { return 1; }
  double log_density(int, std::span<const double>) const override {
    return -std::numeric_limits<double>::infinity();
  }
  void sample(int, DrawStream&, std::span<double>) const override {}
};

PosteriorVector random_posterior(std::mt19937_64& gen, int m) {
  std::exponential_distribution<double> exp_dist(1.0);
  std::vector<double> v(static_cast<std::size_t>(m));
  double sum = 0.0;
  for (double& x : v) sum += (x = exp_dist(gen) + 1e-12);
  for (double& x : v) x /= sum;
  return PosteriorVector::from_values(v);
}

}  // namespace

TEST_CASE("gaussian log likelihood") {
  const GaussianChannel unit({{0.0}}, 1.0);
  const double x0[] = {0.0};
  CHECK(unit.log_density(0, x0) == doctest::Approx(-0.5 * std::log(2.0 * std::numbers::pi)).epsilon(1e-12));
  const double x1[] = {1.0};
  CHECK(unit.log_density(0, x1) ==
        doctest::Approx(-0.5 * std::log(2.0 * std::numbers::pi) - 0.5).epsilon(1e-12));

  const GaussianChannel wide({{0.0, 0.0}}, 2.0);
  const double x2[] = {1.0, 1.0};
  CHECK(wide.log_density(0, x2) ==
        doctest::Approx(-std::log(4.0 * std::numbers::pi) - 0.5).epsilon(1e-12));

  const double bad[] = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS((void)unit.log_density(0, bad), std::invalid_argument);
}

TEST_CASE("posterior basics") {
  const Prior uniform = Prior::uniform(2);
  const GaussianChannel same({{0.0}, {0.0}}, 1.0);
  const double x0[] = {0.7};
  CHECK(posterior(uniform, same, x0).values[0] == doctest::Approx(0.5).epsilon(1e-12));

  // Equal likelihoods: posterior equals the prior.
  const Prior skew{{0.9, 0.1}};
  const PosteriorVector p = posterior(skew, same, x0);
  CHECK(p.values[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(p.values[1] == doctest::Approx(0.1).epsilon(1e-12));

  // Midpoint symmetry.
  const GaussianChannel pair({{0.0}, {1.0}}, 1.0);
  const double mid[] = {0.5};
  CHECK(posterior(uniform, pair, mid).values[0] == doctest::Approx(0.5).epsilon(1e-12));

  const ImpossibleChannel impossible;
  CHECK_THROWS_AS((void)posterior(uniform, impossible, x0), std::domain_error);
}

TEST_CASE("posterior normalization over random models") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> m_dist(2, 6);
  std::uniform_real_distribution<double> mean_dist(-4.0, 4.0);
  std::uniform_real_distribution<double> var_dist(0.2, 3.0);
  std::exponential_distribution<double> exp_dist(1.0);
  for (int trial = 0; trial < 100000; ++trial) {
    const int m = m_dist(gen);
    std::vector<std::vector<double>> means;
    for (int i = 0; i < m; ++i) means.push_back({mean_dist(gen)});
    std::vector<double> prior(static_cast<std::size_t>(m));
    double sum = 0.0;
    for (double& p : prior) sum += (p = exp_dist(gen) + 1e-6);
    for (double& p : prior) p /= sum;
    const GaussianChannel channel(means, var_dist(gen));
    const double x[] = {mean_dist(gen)};
    const PosteriorVector post = posterior(Prior{prior}, channel, x);
    double total = 0.0;
    for (double v : post.values) total += v;
    REQUIRE(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("posterior log-space stability at 100 sigma") {
  const GaussianChannel pair({{0.0}, {1.0}}, 1.0);
  const double far[] = {100.0};
  const PosteriorVector post = posterior(Prior::uniform(2), pair, far);
  for (double v : post.values) CHECK(std::isfinite(v));
  CHECK(post.values[0] + post.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isfinite(post.log_evidence));
}

TEST_CASE("tilted posterior") {
  const PosteriorVector p = PosteriorVector::from_values({0.8, 0.2});
  SUBCASE("order 1 is the identity") {
    const PosteriorVector t = tilted_posterior(p, 1.0);
    CHECK(t.values[0] == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(t.values[1] == doctest::Approx(0.2).epsilon(1e-14));
  }
  SUBCASE("order 2, Z = 0.68") {
    const PosteriorVector t = tilted_posterior(p, 2.0);
    CHECK(t.values[0] == doctest::Approx(16.0 / 17.0).epsilon(1e-12));
    CHECK(t.values[1] == doctest::Approx(1.0 / 17.0).epsilon(1e-12));
  }
  SUBCASE("purification limit") {
    const PosteriorVector q = PosteriorVector::from_values({0.6, 0.3, 0.1});
    const PosteriorVector t = tilted_posterior(q, 1e6);
    CHECK(std::abs(t.values[0] - 1.0) < 1e-9);
    CHECK(std::abs(t.values[1]) < 1e-9);
    CHECK(std::abs(t.values[2]) < 1e-9);
  }
  SUBCASE("order below 1 rejected") {
    CHECK_THROWS_AS((void)tilted_posterior(p, 0.5), std::invalid_argument);
  }
}

TEST_CASE("tilting is monotone purifying and rank preserving") {
  std::mt19937_64 gen(5);
  const double orders[] = {1.0, 1.3, 2.0, 4.0, 16.0, 300.0};
  for (int trial = 0; trial < 300; ++trial) {
    const PosteriorVector post = random_posterior(gen, 2 + trial % 5);
    double prev_max = 0.0;
    for (double n : orders) {
      const PosteriorVector t = tilted_posterior(post, n);
      const double mx = t.values[static_cast<std::size_t>(map_decision(t))];
      CHECK(mx >= prev_max - 1e-13);
      prev_max = mx;
      CHECK(t.order == post.order);
      for (int k = 0; k + 1 < t.size(); ++k) CHECK(t.ranked(k) >= t.ranked(k + 1));
    }
  }
}

TEST_CASE("map decision tie-breaks to the lowest index") {
  CHECK(map_decision(PosteriorVector::from_values({0.2, 0.7, 0.1})) == 1);
  CHECK(map_decision(PosteriorVector::from_values({0.5, 0.5})) == 0);
  CHECK(map_decision(PosteriorVector::from_values({1.0, 0.0})) == 0);
}
