#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace polyzeta {

using BigInt = mpz_class;

/// Exact fraction. gmpxx keeps mpq values canonical (positive denominator,
/// reduced) through every arithmetic operation; make_rational canonicalizes
/// values built from a raw numerator/denominator pair.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Exact value coeff * pi^pi_power.
struct PiMultiple {
  Rational coeff;
  unsigned pi_power = 0;

  bool operator==(const PiMultiple& other) const {
    return pi_power == other.pi_power && coeff == other.coeff;
  }

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// "π^4 * 1/96"
  std::string exact_string() const;
  /// Decimal expansion with `digits` significant digits, correctly rounded
  /// from a 256-bit evaluation.
  std::string decimal_string(int digits) const;
};

PiMultiple operator*(const PiMultiple& a, const PiMultiple& b);
PiMultiple operator*(const Rational& c, const PiMultiple& a);

/// B_m with x/(e^x - 1) = sum B_m x^m / m!, so B_1 = -1/2.
/// Memoized; safe to call from several threads.
Rational bernoulli(unsigned m);

/// E_m with 1/cosh(x) = sum E_m x^m / m!. Memoized, thread-safe.
BigInt euler_number(unsigned m);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned e);

std::string to_string(const Rational& r);

}  // namespace polyzeta
