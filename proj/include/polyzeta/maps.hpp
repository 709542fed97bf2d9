#pragma once

#include <Eigen/Dense>

#include <functional>
#include <random>

namespace polyzeta {

using PointK = Eigen::VectorXd;
using VectorMap = std::function<PointK(const PointK&)>;
using DomainTest = std::function<bool(const PointK&)>;

/// u_i > 0 and u_i + u_{i+1} < 1 cyclically.
bool in_delta(const PointK& u);
/// xi_i > 0 and xi_i xi_{i+1} < 1 cyclically.
bool in_hypertope(const PointK& xi);
bool in_open_cube(const PointK& x);

/// x_i = sin(pi u_i / 2) / cos(pi u_{i+1} / 2), Delta^k -> (0,1)^k.
PointK trig_map(const PointK& u);

/// (pi/2)^k (1 - (-1)^k prod x_i^2)
double trig_jacobian_closed(const PointK& x);

/// x_i = xi_i^2 (xi_{i+1}^2 + 1) / (xi_i^2 + 1), H^k -> (0,1)^k.
PointK zagier_map(const PointK& xi);

/// 2^k sqrt(prod x) (1 - (-1)^k prod x)
double zagier_jacobian_x_factor(const PointK& x);
/// prod (xi_i^2 + 1)
double zagier_jacobian_xi_divisor(const PointK& xi);
/// Determinant of d x / d xi for x = zagier_map(xi).
double zagier_jacobian_closed(const PointK& x, const PointK& xi);

struct FiniteDifferenceConfig {
  double h = 1e-5;
  double margin_factor = 10.0;  // required clearance, in units of h
};

/// det of the central-difference Jacobian of `map` at `point`. Throws when
/// point +- margin_factor * h * e_j leaves the domain for some j.
double numeric_jacobian_det(const VectorMap& map, const PointK& point, const DomainTest& inside,
                            const FiniteDifferenceConfig& cfg = {});

/// Rejection-samples a point of Delta^k whose margin_factor*h neighbourhood
/// along each axis stays inside.
PointK sample_delta_interior(int k, std::mt19937_64& g, const FiniteDifferenceConfig& cfg = {});
/// Same for H^k, drawn as xi_i = tan(pi u_i / 2) from Delta^k.
PointK sample_hypertope_interior(int k, std::mt19937_64& g, const FiniteDifferenceConfig& cfg = {});

struct JacobianComparison {
  double closed = 0.0;
  double numeric = 0.0;
  double rel_error() const;
};

JacobianComparison compare_trig_jacobian(const PointK& u, const FiniteDifferenceConfig& cfg = {});
JacobianComparison compare_zagier_jacobian(const PointK& xi, const FiniteDifferenceConfig& cfg = {});

}  // namespace polyzeta
