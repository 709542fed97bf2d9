#include "doctest.h"
#include "polyzeta/combinatorial.hpp"
#include "polyzeta/parallel.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace polyzeta;

TEST_CASE("half-Cauchy inverse CDF") {
  CHECK(sample_half_cauchy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sample_half_cauchy(0.25) == doctest::Approx(std::tan(std::numbers::pi / 8)).epsilon(1e-15));
  CHECK(sample_half_cauchy(1e-300) > 0.0);
  auto g = make_stream(7, StreamTag::points, 0);
  int below_one = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) below_one += sample_half_cauchy(open_unit(g)) < 1.0 ? 1 : 0;
  CHECK(std::fabs(below_one / double(n) - 0.5) < 4 * 0.5 / std::sqrt(double(n)));
}

TEST_CASE("open_unit stays strictly inside (0,1)") {
  auto g = make_stream(1, StreamTag::points, 3);
  for (int i = 0; i < 100000; ++i) {
    const double u = open_unit(g);
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("streams are reproducible and distinct") {
  auto a = make_stream(5, StreamTag::polytope, 2);
  auto b = make_stream(5, StreamTag::polytope, 2);
  auto c = make_stream(5, StreamTag::hypertope, 2);
  auto d = make_stream(5, StreamTag::polytope, 3);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}

TEST_CASE("parallel estimates equal the serial reference bitwise") {
  for (int k : {1, 3, 6}) {
    const std::int64_t n = 3 * kSampleChunk + 1234;
    CAPTURE(k);
    CHECK(mc_delta_volume(k, n, 99) == reference::mc_delta_volume(k, n, 99));
    CHECK(mc_hypertope_prob(k, n, 99) == reference::mc_hypertope_prob(k, n, 99));
  }
}

TEST_CASE("estimates do not depend on the thread count") {
  const int saved = max_threads();
  set_threads(1);
  const Estimate one = mc_delta_volume(4, 300000, 11);
  set_threads(std::max(2, saved));
  const Estimate many = mc_delta_volume(4, 300000, 11);
  set_threads(saved);
  CHECK(one == many);
}

TEST_CASE("estimate fields") {
  const Estimate e = mc_delta_volume(2, 10000, 3);
  CHECK(e.n_samples == 10000);
  CHECK(e.seed == 3);
  CHECK(e.mean == doctest::Approx(e.hits / 10000.0).epsilon(1e-15));
  CHECK(e.std_error == doctest::Approx(std::sqrt(e.mean * (1 - e.mean) / 10000)).epsilon(1e-15));
  CHECK_THROWS_AS(mc_delta_volume(0, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_delta_volume(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_hypertope_prob(0, 100, 1), std::invalid_argument);
}

TEST_CASE("quadrupling the sample count halves the standard error") {
  const Estimate a = mc_delta_volume(3, 250000, 17);
  const Estimate b = mc_delta_volume(3, 1000000, 17);
  CHECK(b.std_error / a.std_error == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("both models land within 4 sigma of the exact volume") {
  for (int k = 1; k <= 8; ++k) {
    const double exact = volume_delta(k).get_d();
    const Estimate p = mc_delta_volume(k, 1000000, 42);
    const Estimate h = mc_hypertope_prob(k, 1000000, 42);
    CAPTURE(k);
    CHECK(std::fabs(p.mean - exact) <= 4 * p.std_error);
    CHECK(std::fabs(h.mean - exact) <= 4 * h.std_error);
    CHECK(std::fabs(p.mean - h.mean) <= 5 * std::hypot(p.std_error, h.std_error));
  }
}

TEST_CASE("4 sigma exceedances across seeds stay within the flake budget") {
  const double exact = volume_delta(5).get_d();
  int misses = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const Estimate e = mc_delta_volume(5, 20000, 1000 + static_cast<std::uint64_t>(s));
    misses += std::fabs(e.mean - exact) > 4 * e.std_error ? 1 : 0;
  }
  CHECK(misses <= seeds / 100);
}

TEST_CASE("quotient of half-Cauchy variables") {
  const auto check = z2_distribution_check(100000, 42);
  CHECK(check.n_samples == 100000);
  CHECK(check.threshold == doctest::Approx(1.95 / std::sqrt(100000.0)));
  CHECK(check.pass());
  CHECK(std::fabs(check.median - 1.0) < 0.02);
  CHECK_THROWS_AS(z2_distribution_check(100, 42), std::invalid_argument);
}

TEST_CASE("Z and 1/Z have the same distribution") {
  auto z = z2_sample(50000, 8);
  std::vector<double> inv(z.size());
  std::transform(z.begin(), z.end(), inv.begin(), [](double v) { return 1 / v; });
  std::sort(z.begin(), z.end());
  std::sort(inv.begin(), inv.end());
  auto cdf = [](double t) { return z2_cdf(t); };
  const double thr = 1.95 / std::sqrt(50000.0);
  CHECK(ks_statistic(z, cdf) <= thr);
  CHECK(ks_statistic(inv, cdf) <= thr);
}

TEST_CASE("ks_statistic on a tiny sample") {
  const std::vector<double> s{0.25, 0.5, 0.75};
  const double d = ks_statistic(s, [](double x) { return x; });
  CHECK(d == doctest::Approx(0.25));
}
