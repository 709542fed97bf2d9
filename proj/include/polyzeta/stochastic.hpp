#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace polyzeta {

/// Bernoulli Monte Carlo estimate. std_error = sqrt(mean (1 - mean) / n).
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::int64_t hits = 0;

  bool operator==(const Estimate&) const = default;
};

/// Independent streams. Each (seed, model, chunk) triple gets its own
/// mt19937_64 seeded through std::seed_seq, so chunk c always sees the same
/// numbers no matter which thread runs it.
enum class StreamTag : std::uint32_t { polytope = 1, hypertope = 2, quotient = 3, points = 4 };

std::mt19937_64 make_stream(std::uint64_t seed, StreamTag tag, std::uint64_t chunk);

/// Uniform on the open interval (0,1): (top 53 bits + 1/2) * 2^-53.
inline double open_unit(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

/// Inverse CDF of the density (2/pi)/(x^2+1) on (0, inf): tan(pi u / 2).
double sample_half_cauchy(double u);

/// Pr(U_1 + U_2 < 1, ..., U_k + U_1 < 1) for iid uniforms.
Estimate mc_delta_volume(int k, std::int64_t n_samples, std::uint64_t seed);

/// Pr(X_1 X_2 < 1, ..., X_k X_1 < 1) for iid half-Cauchy variables.
Estimate mc_hypertope_prob(int k, std::int64_t n_samples, std::uint64_t seed);

/// n_samples draws of X_1 / X_2.
std::vector<double> z2_sample(std::int64_t n_samples, std::uint64_t seed);

/// sup_z |F_n(z) - F(z)| for an ascending sample.
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);

struct Z2Check {
  double statistic = 0.0;
  double threshold = 0.0;  // 1.95 / sqrt(n)
  double median = 0.0;
  std::int64_t n_samples = 0;

  bool pass() const { return statistic <= threshold; }
};

/// KS distance between a sample of X_1/X_2 and z2_cdf. n_samples >= 10^4.
Z2Check z2_distribution_check(std::int64_t n_samples, std::uint64_t seed, double tol = 1e-10);

namespace reference {

Estimate mc_delta_volume(int k, std::int64_t n_samples, std::uint64_t seed);
Estimate mc_hypertope_prob(int k, std::int64_t n_samples, std::uint64_t seed);

}  // namespace reference

}  // namespace polyzeta
