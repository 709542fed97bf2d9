#pragma once

#include "polyzeta/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace polyzeta {

/// Kahan-compensated accumulator.
struct KahanSum {
  long double sum = 0.0L;
  long double comp = 0.0L;

  void add(long double x) {
    const long double y = x - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// Sum of term(n) for n in [begin, end). Work is cut into fixed chunks of
/// kSeriesChunk indices; each chunk is Kahan-summed independently and the
/// chunk partials are folded in chunk order, so the result is identical for
/// any thread count.
template <class Term>
long double chunked_sum(std::int64_t begin, std::int64_t end, const Term& term) {
  if (end <= begin) return 0.0L;
  const std::int64_t nchunks = (end - begin + kSeriesChunk - 1) / kSeriesChunk;
  std::vector<long double> partial(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::int64_t lo = begin + c * kSeriesChunk;
    const std::int64_t hi = std::min(end, lo + kSeriesChunk);
    KahanSum acc;
    for (std::int64_t n = lo; n < hi; ++n) acc.add(term(n));
    partial[static_cast<std::size_t>(c)] = acc.sum;
  }
  KahanSum total;
  for (long double p : partial) total.add(p);
  return total.sum;
}

namespace reference {

/// Single Kahan pass over [begin, end), no chunking.
template <class Term>
long double serial_sum(std::int64_t begin, std::int64_t end, const Term& term) {
  KahanSum acc;
  for (std::int64_t n = begin; n < end; ++n) acc.add(term(n));
  return acc.sum;
}

}  // namespace reference

}  // namespace polyzeta
