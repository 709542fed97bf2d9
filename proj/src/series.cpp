#include "polyzeta/series.hpp"

#include "polyzeta/sum.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

namespace polyzeta {

SeriesCapExceeded::SeriesCapExceeded(long double achievable, std::int64_t cap)
    : std::runtime_error("series term cap " + std::to_string(cap) +
                         " reached; achievable tail bound " +
                         std::to_string(static_cast<double>(achievable))),
      achievable_(achievable) {}

namespace {

// Signed interval known to contain the omitted tail.
struct Enclosure {
  long double lo;
  long double hi;
  long double half_width() const { return (hi - lo) / 2; }
  long double mid() const { return (lo + hi) / 2; }
};

// Tail sum_{n>=N} h(n) of a completely monotone h, with H(x) = int_x^inf h.
// Trapezoid and midpoint sums bracket the integral of a convex function:
//   H(N) + h(N)/2 <= tail <= H(N - 1/2).
template <class H, class Hint>
Enclosure monotone_tail(std::int64_t N, const H& h, const Hint& H_int) {
  const long double n = static_cast<long double>(N);
  return {H_int(n) + h(n) / 2, H_int(n - 0.5L)};
}

// Tail sum_{n>=N} (-1)^n b(n) of a completely monotone b, with
// W(s) = int_s^{s+1} b. Pairing consecutive terms gives a completely
// monotone series in steps of 2, bracketed as in monotone_tail.
template <class B, class Win>
Enclosure alternating_tail(std::int64_t N, const B& b, const Win& W) {
  const long double n = static_cast<long double>(N);
  const long double lo = W(n) / 2 + (b(n) - b(n + 1)) / 2;
  const long double hi = W(n - 1) / 2;
  if (N % 2 == 0) return {lo, hi};
  return {-hi, -lo};
}

long double rounding_allowance(long double value) {
  return 32 * LDBL_EPSILON * (1 + std::fabs(value));
}

template <class Term, class Tail>
SeriesValue drive(std::int64_t first, std::int64_t min_end, const Term& term, const Tail& tail,
                  double eps, std::int64_t max_terms) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  const long double target = static_cast<long double>(eps) - rounding_allowance(4);
  std::int64_t end = std::max<std::int64_t>(min_end, first + 16);
  const std::int64_t cap_end = first + max_terms;
  Enclosure enc = tail(end);
  while (!(enc.half_width() <= target)) {
    if (end >= cap_end) throw SeriesCapExceeded(enc.half_width(), max_terms);
    end = std::min(cap_end, end * 2);
    enc = tail(end);
  }
  SeriesValue out;
  out.value = chunked_sum(first, end, term) + enc.mid();
  out.tail_bound = enc.half_width() + rounding_allowance(out.value);
  out.terms_used = end - first;
  return out;
}

long double ipow_neg(long double x, int k) { return std::pow(x, static_cast<long double>(-k)); }

}  // namespace

SeriesValue s_k_series(int k, double eps, std::int64_t max_terms) {
  if (k < 1) throw std::invalid_argument("s_k_series requires k >= 1");
  const auto b = [k](long double t) { return ipow_neg(2 * t + 1, k); };
  if (k % 2 == 0) {
    const auto term = [&](std::int64_t n) { return b(static_cast<long double>(n)); };
    const auto H = [k](long double x) { return std::pow(2 * x + 1, static_cast<long double>(1 - k)) / (2 * (k - 1)); };
    return drive(0, 1, term, [&](std::int64_t N) { return monotone_tail(N, b, H); }, eps, max_terms);
  }
  const auto term = [&](std::int64_t n) {
    const long double v = b(static_cast<long double>(n));
    return (n % 2 == 0) ? v : -v;
  };
  const auto W = [k](long double s) -> long double {
    if (k == 1) return std::log1p(2 / (2 * s + 1)) / 2;
    const long double e = static_cast<long double>(1 - k);
    return (std::pow(2 * s + 1, e) - std::pow(2 * s + 3, e)) / (2 * (k - 1));
  };
  return drive(0, 2, term, [&](std::int64_t N) { return alternating_tail(N, b, W); }, eps, max_terms);
}

SeriesValue zeta_2k_series(int k, double eps, std::int64_t max_terms) {
  if (k < 1) throw std::invalid_argument("zeta_2k_series requires k >= 1");
  const int p = 2 * k;
  const auto h = [p](long double t) { return ipow_neg(t, p); };
  const auto H = [p](long double x) { return std::pow(x, static_cast<long double>(1 - p)) / (p - 1); };
  const auto term = [&](std::int64_t n) { return h(static_cast<long double>(n)); };
  return drive(1, 2, term, [&](std::int64_t N) { return monotone_tail(N, h, H); }, eps, max_terms);
}

SeriesValue s_ka_series(int k, double a, double eps, std::int64_t max_terms) {
  if (k < 2) throw std::invalid_argument("s_ka_series requires k >= 2");
  if (!(a > 1)) throw std::invalid_argument("s_ka_series requires a > 1");
  const long double A = a;
  const long double e = static_cast<long double>(1 - k);
  // Phi(x) = int_x^inf s^{-k} ds
  const auto Phi = [k, e](long double x) { return std::pow(x, e) / (k - 1); };

  SeriesValue out;
  if (k % 2 == 0) {
    const auto h = [&](long double t) { return ipow_neg(A * t + 1, k) + ipow_neg(A * t - 1, k); };
    const auto H = [&](long double x) { return (Phi(A * x + 1) + Phi(A * x - 1)) / A; };
    const auto term = [&](std::int64_t n) { return h(static_cast<long double>(n)); };
    out = drive(1, 3, term, [&](std::int64_t N) { return monotone_tail(N, h, H); }, eps, max_terms);
  } else {
    // pair n, -n: (-1)^n [(an+1)^{-k} - (an-1)^{-k}] = -(-1)^n b(n)
    const auto b = [&](long double t) { return ipow_neg(A * t - 1, k) - ipow_neg(A * t + 1, k); };
    const auto W = [&](long double s) {
      return (Phi(A * s - 1) - Phi(A * s + A - 1) - Phi(A * s + 1) + Phi(A * s + A + 1)) / A;
    };
    const auto term = [&](std::int64_t n) {
      const long double v = b(static_cast<long double>(n));
      return (n % 2 == 0) ? -v : v;
    };
    const auto tail = [&](std::int64_t N) {
      const Enclosure enc = alternating_tail(N, b, W);
      return Enclosure{-enc.hi, -enc.lo};
    };
    out = drive(1, 3, term, tail, eps, max_terms);
  }
  out.value += 1;  // n = 0
  out.terms_used = 2 * out.terms_used + 1;
  return out;
}

PiMultiple j_k_closed(int k) {
  if (k < 2) throw std::invalid_argument("J_k requires k >= 2");
  const auto uk = static_cast<unsigned>(k);
  const Rational half_pow = make_rational(BigInt(1), pow2(uk));
  if (k % 2 == 0) {
    Rational b = bernoulli(uk);
    b = abs(b);
    const Rational lead = make_rational(pow2(2 * uk) - pow2(uk), BigInt(k));
    return PiMultiple{lead * half_pow * b, uk};
  }
  BigInt e = euler_number(uk - 1);
  e = abs(e);
  return PiMultiple{half_pow * Rational(e), uk};
}

PiMultiple s_k_from_jk(int k) {
  if (k < 2) throw std::invalid_argument("s_k_from_jk requires k >= 2");
  return make_rational(BigInt(1), 2 * factorial(static_cast<unsigned>(k - 1))) * j_k_closed(k);
}

double s_2a_closed(double a) {
  if (!(a > 1)) throw std::invalid_argument("S(2,a) requires a > 1");
  const long double x = std::numbers::pi_v<long double> / a;
  const long double s = std::sin(x);
  return static_cast<double>(x * x / (s * s));
}

double s_3a_closed(double a) {
  if (!(a > 1)) throw std::invalid_argument("S(3,a) requires a > 1");
  const long double x = std::numbers::pi_v<long double> / a;
  const long double csc = 1 / std::sin(x);
  const long double cot = std::cos(x) / std::sin(x);
  return static_cast<double>(x * x * x / 2 * (csc * csc * csc + cot * cot * csc));
}

double s_ka_from_jka(int k, double jka) {
  if (k < 2) throw std::invalid_argument("s_ka_from_jka requires k >= 2");
  return jka / factorial(static_cast<unsigned>(k - 1)).get_d();
}

}  // namespace polyzeta
