#include "polyzeta/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxLevel = 10;
constexpr double kTMax = 6.0;  // exp(-pi sinh 6) ~ 1e-275, still a normal double

struct Node {
  double x;
  double xc;
  double w;
};

// nodes[l] holds the abscissas first used at level l (step 2^-l).
const std::vector<std::vector<Node>>& node_table() {
  static const std::vector<std::vector<Node>> table = [] {
    std::vector<std::vector<Node>> levels(kMaxLevel + 1);
    auto make = [](double t) {
      const double u = kPi / 2 * std::sinh(t);
      const double e = std::exp(-2 * std::fabs(u));
      const double big = 1 / (1 + e);
      const double small = e / (1 + e);
      Node n{};
      n.x = t >= 0 ? big : small;
      n.xc = t >= 0 ? small : big;
      n.w = kPi * std::cosh(t) * big * small;
      return n;
    };
    for (int j = -static_cast<int>(kTMax); j <= static_cast<int>(kTMax); ++j) {
      levels[0].push_back(make(j));
    }
    for (int l = 1; l <= kMaxLevel; ++l) {
      const double h = std::ldexp(1.0, -l);
      const int jmax = static_cast<int>(kTMax / h);
      for (int j = -jmax + 1; j < jmax; j += 2) levels[l].push_back(make(j * h));
    }
    return levels;
  }();
  return table;
}

// log(x) accurate near x = 1 through the complement.
double log_unit(double x, double xc) { return x < 0.5 ? std::log(x) : std::log1p(-xc); }

void require_k(int k, int min) {
  if (k < min) throw std::invalid_argument("k must be >= " + std::to_string(min));
}

}  // namespace

QuadResult integrate_unit(const UnitIntegrand& f, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const auto& levels = node_table();
  QuadResult r;
  double sum = 0;
  double prev = 0;
  for (int l = 0; l <= kMaxLevel; ++l) {
    for (const Node& n : levels[l]) {
      if (n.w == 0) continue;
      const double v = n.w * f(n.x, n.xc);
      ++r.evaluations;
      if (std::isfinite(v)) sum += v;
    }
    const double h = std::ldexp(1.0, -l);
    const double estimate = h * sum;
    r.value = estimate;
    if (l >= 2) {
      r.abs_error_estimate = std::fabs(estimate - prev);
      if (r.abs_error_estimate <= tol * std::max(1.0, std::fabs(estimate))) {
        r.converged = true;
        return r;
      }
    }
    prev = estimate;
  }
  return r;
}

QuadResult integrate_unit(const std::function<double(double)>& f, double tol) {
  return integrate_unit(UnitIntegrand([&f](double x, double) { return f(x); }), tol);
}

QuadResult j_k_quad(int k, double tol) {
  require_k(k, 2);
  const bool even = k % 2 == 0;
  const double limit_at_one = (k == 2) ? 1.0 : 0.0;  // 2 * lim ln^{k-1}z / (z^2 - 1)
  auto f = [=](double z, double zc) {
    if (even && zc < kRemovableRadius) return limit_at_one;
    const double lz = log_unit(z, zc);
    const double num = std::pow(lz, k - 1);
    // z^2 - 1 = -zc (1 + z)
    const double den = even ? -zc * (1 + z) : z * z + 1;
    return 2 * num / den;
  };
  return integrate_unit(UnitIntegrand(f), tol);
}

QuadResult j_ka_quad(int k, double a, double tol) {
  require_k(k, 2);
  if (!(a > 1)) throw std::invalid_argument("J_{k,a} requires a > 1");
  const bool even = k % 2 == 0;
  const double limit_at_one = (k == 2) ? 2 / a : 0.0;
  // ln^{k-1}(u) [1/(u^a - s) + (-1)^{k-1} u^{a-2}/(1 - s u^a)], s = (-1)^k,
  // which collapses to ln^{k-1}(u) (1 + u^{a-2}) / (u^a - s).
  auto f = [=](double u, double uc) {
    if (even && uc < kRemovableRadius) return limit_at_one;
    const double lu = log_unit(u, uc);
    const double num = std::pow(lu, k - 1) * (1 + std::pow(u, a - 2));
    const double den = even ? std::expm1(a * std::log1p(-uc)) : std::pow(u, a) + 1;
    return num / den;
  };
  return integrate_unit(UnitIntegrand(f), tol);
}

QuadResult vanishing_integral_check(int k) {
  require_k(k, 1);
  const double s = (k % 2 == 0) ? 1.0 : -1.0;
  auto f = [=](double u, double uc) {
    const double lk = std::pow(log_unit(u, uc), k);
    // u^2 - s and 1 - s u^2, written so that for s = 1 they are exact negatives
    const double lower = s > 0 ? -uc * (1 + u) : u * u + 1;
    const double upper = s > 0 ? uc * (1 + u) : 1 + u * u;
    return lk * (1 / lower) + lk * (s / upper);
  };
  return integrate_unit(UnitIntegrand(f), 1e-12);
}

QuadResult cauchy_pv(int m, int n, double tol) {
  if (m < 1 || m >= n) {
    throw std::invalid_argument("cauchy_pv requires 1 <= m < n");
  }
  const double c = 1.0 / n;
  const double lim_lower = (2.0 * m - n - 1) / (2.0 * n);
  const double lim_upper = (2.0 * m + 1 - n) / (2.0 * n);
  auto f = [=](double u, double uc) {
    if (uc < kRemovableRadius) return lim_lower + lim_upper;
    const double un_minus_1 = std::expm1(n * std::log1p(-uc));  // u^n - 1
    // (0,1) half: t^{m-1}/(t^n - 1) - c/(t - 1)
    const double lower = std::pow(u, m - 1) / un_minus_1 + c / uc;
    // (1,inf) half mapped by t = 1/u: u^{n-m-1}/(1 - u^n) - c/(1 - u)
    const double upper = -std::pow(u, n - m - 1) / un_minus_1 - c / uc;
    return lower + upper;
  };
  return integrate_unit(UnitIntegrand(f), tol);
}

double cauchy_pv_closed(int m, int n) {
  const double x = m * kPi / n;
  return -(kPi / n) * std::cos(x) / std::sin(x);
}

QuadResult density_normalization(double a, DensityRole role, double tol) {
  if (!(a > 1)) throw std::invalid_argument("density requires a > 1");
  if (role == DensityRole::first) {
    const double c = a / kPi * std::sin(kPi / a);
    auto f = [=](double u) { return c * (1 + std::pow(u, a - 2)) / (1 + std::pow(u, a)); };
    return integrate_unit(std::function<double(double)>(f), tol);
  }
  const double c = 2 / kPi * std::sin(kPi / a);
  auto f = [=](double u) {
    return c * (std::pow(u, 1 - 2 / a) + std::pow(u, 2 / a - 1)) / (1 + u * u);
  };
  return integrate_unit(std::function<double(double)>(f), tol);
}

namespace {

constexpr double kZ2Scale = 4 / (kPi * kPi);

// f(t) given t and tc = 1 - t.
double z2_density_c(double t, double tc) {
  if (std::fabs(tc) < kRemovableRadius) return kZ2Scale / 2;
  const double lt = (t > 0.5 && t < 1.5) ? std::log1p(-tc) : std::log(t);
  return kZ2Scale * lt / (-tc * (1 + t));
}

}  // namespace

double z2_density(double z) {
  if (!(z > 0)) return 0.0;
  return z2_density_c(z, 1 - z);
}

QuadResult z2_cdf_quad(double z, double tol) {
  if (!(z > 0)) throw std::invalid_argument("z2_cdf requires z > 0");
  if (z <= 1) {
    const double zc = 1 - z;
    auto f = [=](double x, double xc) { return z * z2_density_c(z * x, zc + z * xc); };
    return integrate_unit(UnitIntegrand(f), tol);
  }
  // F(z) = F(1) + int_1^z f(t) dt, and f(1/u)/u^2 = f(u) turns the second
  // piece into int_{1/z}^1 f(u) du.
  QuadResult head = integrate_unit(UnitIntegrand([](double x, double xc) { return z2_density_c(x, xc); }), tol);
  QuadResult tail{0.0, 0.0, 0, true};
  if (std::isfinite(z)) {
    const double lo = 1 / z;
    const double span = 1 - lo;
    auto f = [=](double x, double xc) { return span * z2_density_c(lo + span * x, span * xc); };
    tail = integrate_unit(UnitIntegrand(f), tol);
  } else {
    tail = head;
  }
  return QuadResult{head.value + tail.value, head.abs_error_estimate + tail.abs_error_estimate,
                    head.evaluations + tail.evaluations, head.converged && tail.converged};
}

double z2_cdf(double z, double tol) {
  const QuadResult r = z2_cdf_quad(z, tol);
  if (!r.converged) throw std::runtime_error("z2_cdf quadrature did not converge");
  return r.value;
}

}  // namespace polyzeta
