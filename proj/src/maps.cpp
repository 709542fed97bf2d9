#include "polyzeta/maps.hpp"

#include "polyzeta/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyzeta {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Index next(Eigen::Index i, Eigen::Index k) { return (i + 1) % k; }

double sign_power(Eigen::Index k) { return (k % 2 == 0) ? 1.0 : -1.0; }  // (-1)^k

}  // namespace

bool in_delta(const PointK& u) {
  const auto k = u.size();
  if (k == 0) return false;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(u[i] > 0) || !(u[i] + u[next(i, k)] < 1)) return false;
  }
  return true;
}

bool in_hypertope(const PointK& xi) {
  const auto k = xi.size();
  if (k == 0) return false;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(xi[i] > 0) || !(xi[i] * xi[next(i, k)] < 1)) return false;
  }
  return true;
}

bool in_open_cube(const PointK& x) {
  return x.size() > 0 && (x.array() > 0).all() && (x.array() < 1).all();
}

PointK trig_map(const PointK& u) {
  if (!in_delta(u)) throw std::domain_error("trig_map: point outside Delta^k");
  const auto k = u.size();
  PointK x(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    x[i] = std::sin(kPi * u[i] / 2) / std::cos(kPi * u[next(i, k)] / 2);
  }
  return x;
}

double trig_jacobian_closed(const PointK& x) {
  const double p = x.array().square().prod();
  return std::pow(kPi / 2, static_cast<double>(x.size())) * (1 - sign_power(x.size()) * p);
}

PointK zagier_map(const PointK& xi) {
  if (!in_hypertope(xi)) throw std::domain_error("zagier_map: point outside H^k");
  const auto k = xi.size();
  PointK x(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double a = xi[i] * xi[i];
    const double b = xi[next(i, k)] * xi[next(i, k)];
    x[i] = a * (b + 1) / (a + 1);
  }
  return x;
}

double zagier_jacobian_x_factor(const PointK& x) {
  const double p = x.prod();
  return std::pow(2.0, static_cast<double>(x.size())) * std::sqrt(p) * (1 - sign_power(x.size()) * p);
}

double zagier_jacobian_xi_divisor(const PointK& xi) { return (xi.array().square() + 1).prod(); }

double zagier_jacobian_closed(const PointK& x, const PointK& xi) {
  return zagier_jacobian_x_factor(x) / zagier_jacobian_xi_divisor(xi);
}

double numeric_jacobian_det(const VectorMap& map, const PointK& point, const DomainTest& inside,
                            const FiniteDifferenceConfig& cfg) {
  const auto k = point.size();
  const double h = cfg.h;
  const double margin = cfg.margin_factor * h;
  PointK probe = point;
  for (Eigen::Index j = 0; j < k; ++j) {
    for (double s : {-margin, margin}) {
      probe[j] = point[j] + s;
      if (!inside(probe)) throw std::domain_error("numeric_jacobian_det: point too close to the boundary");
    }
    probe[j] = point[j];
  }

  Eigen::MatrixXd jac(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    probe[j] = point[j] + h;
    const PointK fp = map(probe);
    probe[j] = point[j] - h;
    const PointK fm = map(probe);
    probe[j] = point[j];
    jac.col(j) = (fp - fm) / (2 * h);
  }
  return jac.partialPivLu().determinant();
}

namespace {

bool clear_of_boundary(const PointK& p, const DomainTest& inside, double margin) {
  if (!inside(p)) return false;
  PointK probe = p;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    for (double s : {-margin, margin}) {
      probe[j] = p[j] + s;
      if (!inside(probe)) return false;
    }
    probe[j] = p[j];
  }
  return true;
}

}  // namespace

PointK sample_delta_interior(int k, std::mt19937_64& g, const FiniteDifferenceConfig& cfg) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double margin = cfg.margin_factor * cfg.h;
  PointK u(k);
  for (;;) {
    for (Eigen::Index i = 0; i < k; ++i) u[i] = open_unit(g);
    if (clear_of_boundary(u, in_delta, margin)) return u;
  }
}

PointK sample_hypertope_interior(int k, std::mt19937_64& g, const FiniteDifferenceConfig& cfg) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double margin = cfg.margin_factor * cfg.h;
  PointK xi(k);
  for (;;) {
    const PointK u = sample_delta_interior(k, g, cfg);
    for (Eigen::Index i = 0; i < k; ++i) xi[i] = sample_half_cauchy(u[i]);
    if (clear_of_boundary(xi, in_hypertope, margin)) return xi;
  }
}

double JacobianComparison::rel_error() const { return std::fabs(numeric - closed) / std::fabs(closed); }

JacobianComparison compare_trig_jacobian(const PointK& u, const FiniteDifferenceConfig& cfg) {
  return {trig_jacobian_closed(trig_map(u)), numeric_jacobian_det(trig_map, u, in_delta, cfg)};
}

JacobianComparison compare_zagier_jacobian(const PointK& xi, const FiniteDifferenceConfig& cfg) {
  return {zagier_jacobian_closed(zagier_map(xi), xi), numeric_jacobian_det(zagier_map, xi, in_hypertope, cfg)};
}

}  // namespace polyzeta
