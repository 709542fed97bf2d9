#include "polyzeta/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace polyzeta {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

PiMultiple operator*(const PiMultiple& a, const PiMultiple& b) {
  return PiMultiple{a.coeff * b.coeff, a.pi_power + b.pi_power};
}

PiMultiple operator*(const Rational& c, const PiMultiple& a) {
  return PiMultiple{c * a.coeff, a.pi_power};
}

namespace {

// Evaluates coeff * pi^p into `out` at the precision `out` was initialized with.
void eval_mpfr(const PiMultiple& v, mpfr_t out) {
  const mpfr_prec_t prec = mpfr_get_prec(out);
  mpfr_t pi;
  mpfr_init2(pi, prec + 32);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_t acc;
  mpfr_init2(acc, prec + 32);
  mpfr_pow_ui(acc, pi, v.pi_power, MPFR_RNDN);
  mpfr_mul_q(out, acc, v.coeff.get_mpq_t(), MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(pi);
}

}  // namespace

long double PiMultiple::to_long_double() const {
  mpfr_t v;
  mpfr_init2(v, 128);
  eval_mpfr(*this, v);
  long double r = mpfr_get_ld(v, MPFR_RNDN);
  mpfr_clear(v);
  return r;
}

std::string PiMultiple::exact_string() const {
  return "π^" + std::to_string(pi_power) + " * " + coeff.get_str();
}

std::string PiMultiple::decimal_string(int digits) const {
  if (digits < 1) digits = 1;
  mpfr_t v;
  mpfr_init2(v, 256);
  eval_mpfr(*this, v);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(v);
  return s;
}

namespace {

struct BernoulliTable {
  std::mutex mu;
  std::vector<Rational> values{Rational(1)};
};

struct EulerTable {
  std::mutex mu;
  std::vector<BigInt> even{BigInt(1)};  // E_0, E_2, E_4, ...
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

EulerTable& euler_table() {
  static EulerTable t;
  return t;
}

}  // namespace

Rational bernoulli(unsigned m) {
  auto& t = bernoulli_table();
  std::lock_guard lock(t.mu);
  auto& b = t.values;
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  for (unsigned n = static_cast<unsigned>(b.size()); n <= m; ++n) {
    if (n >= 3 && n % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    Rational acc(0);
    for (unsigned j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      acc += Rational(binomial(n + 1, j)) * b[j];
    }
    Rational bn = -acc / Rational(n + 1);
    bn.canonicalize();
    b.push_back(bn);
  }
  return b[m];
}

BigInt euler_number(unsigned m) {
  if (m % 2 == 1) return BigInt(0);
  auto& t = euler_table();
  std::lock_guard lock(t.mu);
  auto& e = t.even;
  const unsigned half = m / 2;
  // sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0 for n >= 1
  for (unsigned n = static_cast<unsigned>(e.size()); n <= half; ++n) {
    BigInt acc(0);
    for (unsigned j = 0; j < n; ++j) acc += binomial(2 * n, 2 * j) * e[j];
    e.push_back(-acc);
  }
  return e[half];
}

}  // namespace polyzeta
