#pragma once

#include "polyzeta/exact.hpp"

#include <cstdint>
#include <stdexcept>

namespace polyzeta {

/// Partial sum plus a rigorous enclosure of the omitted tail: the true sum
/// lies in [value - tail_bound, value + tail_bound].
struct SeriesValue {
  long double value = 0.0L;
  long double tail_bound = 0.0L;
  std::int64_t terms_used = 0;
};

inline constexpr std::int64_t kDefaultMaxTerms = std::int64_t{1} << 30;

/// Thrown when eps cannot be met within the term cap.
class SeriesCapExceeded : public std::runtime_error {
 public:
  SeriesCapExceeded(long double achievable, std::int64_t cap);
  long double achievable_bound() const { return achievable_; }

 private:
  long double achievable_;
};

/// S(k) = sum_{n>=0} (-1)^{nk} / (2n+1)^k.
SeriesValue s_k_series(int k, double eps, std::int64_t max_terms = kDefaultMaxTerms);

/// zeta(2k) = sum_{n>=1} n^{-2k}.
SeriesValue zeta_2k_series(int k, double eps, std::int64_t max_terms = kDefaultMaxTerms);

/// S(k, a) = sum_{n in Z} (-1)^{nk} / (a n + 1)^k, summed as n = 0 plus the
/// pairs {n, -n}. Requires k >= 2 and a > 1.
SeriesValue s_ka_series(int k, double a, double eps, std::int64_t max_terms = kDefaultMaxTerms);

/// J_k = int_0^inf ln^{k-1}(z) / (z^2 - (-1)^k) dz in closed form:
/// (2^{2k} - 2^k)/k (pi/2)^k |B_k| for even k, (pi/2)^k |E_{k-1}| for odd k.
PiMultiple j_k_closed(int k);

/// S(k) = J_k / (2 (k-1)!).
PiMultiple s_k_from_jk(int k);

/// (pi/a)^2 csc^2(pi/a)
double s_2a_closed(double a);

/// pi^3 / (2 a^3) (csc^3(pi/a) + cot^2(pi/a) csc(pi/a))
double s_3a_closed(double a);

/// S(k, a) = J_{k,a} / (k-1)!
double s_ka_from_jka(int k, double jka);

}  // namespace polyzeta
