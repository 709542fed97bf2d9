#include "polyzeta/stochastic.hpp"

#include "polyzeta/parallel.hpp"
#include "polyzeta/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyzeta {

std::mt19937_64 make_stream(std::uint64_t seed, StreamTag tag, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

double sample_half_cauchy(double u) {
  if (!(u > 0 && u < 1)) throw std::invalid_argument("sample_half_cauchy requires 0 < u < 1");
  return std::tan(std::numbers::pi * u / 2);
}

namespace {

void check_mc_args(int k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw std::invalid_argument("n_samples must be >= 1");
}

Estimate make_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed) {
  Estimate e;
  e.hits = hits;
  e.n_samples = n;
  e.seed = seed;
  e.mean = static_cast<double>(hits) / static_cast<double>(n);
  e.std_error = std::sqrt(e.mean * (1 - e.mean) / static_cast<double>(n));
  return e;
}

std::int64_t chunk_count(std::int64_t n) { return (n + kSampleChunk - 1) / kSampleChunk; }

// Hits for one chunk of the cyclic-sum (sum_model) or cyclic-product model.
std::int64_t run_chunk(int k, std::int64_t n, std::uint64_t seed, std::int64_t c, bool sum_model) {
  auto g = make_stream(seed, sum_model ? StreamTag::polytope : StreamTag::hypertope,
                       static_cast<std::uint64_t>(c));
  const std::int64_t lo = c * kSampleChunk;
  const std::int64_t hi = std::min(n, lo + kSampleChunk);
  std::vector<double> v(static_cast<std::size_t>(k));
  std::int64_t hits = 0;
  for (std::int64_t s = lo; s < hi; ++s) {
    for (auto& x : v) x = sum_model ? open_unit(g) : sample_half_cauchy(open_unit(g));
    bool inside = true;
    for (int i = 0; i < k && inside; ++i) {
      const double a = v[static_cast<std::size_t>(i)];
      const double b = v[static_cast<std::size_t>((i + 1) % k)];
      inside = sum_model ? (a + b < 1) : (a * b < 1);
    }
    hits += inside ? 1 : 0;
  }
  return hits;
}

Estimate parallel_mc(int k, std::int64_t n, std::uint64_t seed, bool sum_model) {
  check_mc_args(k, n);
  const std::int64_t nchunks = chunk_count(n);
  std::vector<std::int64_t> hits(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    hits[static_cast<std::size_t>(c)] = run_chunk(k, n, seed, c, sum_model);
  }
  std::int64_t total = 0;
  for (auto h : hits) total += h;
  return make_estimate(total, n, seed);
}

Estimate serial_mc(int k, std::int64_t n, std::uint64_t seed, bool sum_model) {
  check_mc_args(k, n);
  std::int64_t total = 0;
  for (std::int64_t c = 0; c < chunk_count(n); ++c) total += run_chunk(k, n, seed, c, sum_model);
  return make_estimate(total, n, seed);
}

}  // namespace

Estimate mc_delta_volume(int k, std::int64_t n, std::uint64_t seed) {
  return parallel_mc(k, n, seed, true);
}

Estimate mc_hypertope_prob(int k, std::int64_t n, std::uint64_t seed) {
  return parallel_mc(k, n, seed, false);
}

namespace reference {

Estimate mc_delta_volume(int k, std::int64_t n, std::uint64_t seed) {
  return serial_mc(k, n, seed, true);
}

Estimate mc_hypertope_prob(int k, std::int64_t n, std::uint64_t seed) {
  return serial_mc(k, n, seed, false);
}

}  // namespace reference

std::vector<double> z2_sample(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n_samples must be >= 1");
  std::vector<double> z(static_cast<std::size_t>(n));
  const std::int64_t nchunks = chunk_count(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    auto g = make_stream(seed, StreamTag::quotient, static_cast<std::uint64_t>(c));
    const std::int64_t lo = c * kSampleChunk;
    const std::int64_t hi = std::min(n, lo + kSampleChunk);
    for (std::int64_t s = lo; s < hi; ++s) {
      const double x1 = sample_half_cauchy(open_unit(g));
      const double x2 = sample_half_cauchy(open_unit(g));
      z[static_cast<std::size_t>(s)] = x1 / x2;
    }
  }
  return z;
}

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  const auto n = static_cast<std::int64_t>(sorted.size());
  if (n == 0) throw std::invalid_argument("empty sample");
  const double inv = 1.0 / static_cast<double>(n);
  double worst = 0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[static_cast<std::size_t>(i)]);
    const double above = static_cast<double>(i + 1) * inv - f;
    const double below = f - static_cast<double>(i) * inv;
    worst = std::max(worst, std::max(above, below));
  }
  return worst;
}

Z2Check z2_distribution_check(std::int64_t n, std::uint64_t seed, double tol) {
  if (n < 10000) throw std::invalid_argument("z2_distribution_check needs at least 10^4 samples");
  std::vector<double> z = z2_sample(n, seed);
  std::sort(z.begin(), z.end());
  Z2Check out;
  out.n_samples = n;
  out.threshold = 1.95 / std::sqrt(static_cast<double>(n));
  out.median = (n % 2 == 1) ? z[static_cast<std::size_t>(n / 2)]
                            : (z[static_cast<std::size_t>(n / 2 - 1)] + z[static_cast<std::size_t>(n / 2)]) / 2;
  std::atomic<long> unconverged{0};
  out.statistic = ks_statistic(z, [tol, &unconverged](double x) {
    const QuadResult r = z2_cdf_quad(x, tol);
    if (!r.converged) unconverged.fetch_add(1, std::memory_order_relaxed);
    return r.value;
  });
  if (unconverged.load() > 0) throw std::runtime_error("z2_cdf quadrature did not converge");
  return out;
}

}  // namespace polyzeta
