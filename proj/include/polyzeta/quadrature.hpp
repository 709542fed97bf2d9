#pragma once

#include <functional>

namespace polyzeta {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Integrand on (0,1). Receives x and its exact complement 1 - x, so that
/// expressions singular or removable at x = 1 can be evaluated without
/// cancellation.
using UnitIntegrand = std::function<double(double x, double xc)>;

/// Tanh-sinh quadrature on (0,1) with level doubling. Stops when successive
/// levels differ by at most tol * max(1, |I|); otherwise returns the finest
/// level with converged = false. Node set depends only on tol.
QuadResult integrate_unit(const UnitIntegrand& f, double tol);
QuadResult integrate_unit(const std::function<double(double)>& f, double tol);

/// Points closer than this to a removable singularity use the limit value.
inline constexpr double kRemovableRadius = 1e-6;

/// J_k = 2 int_0^1 ln^{k-1}(z) / (z^2 - (-1)^k) dz, k >= 2.
QuadResult j_k_quad(int k, double tol);

/// J_{k,a} = int_0^inf ln^{k-1}(z) / (z^a - (-1)^k) dz, folded onto (0,1)
/// with z = 1/u. k >= 2, a > 1.
QuadResult j_ka_quad(int k, double a, double tol);

/// int_0^inf ln^k(z) / (z^2 - (-1)^k) dz after folding. The two folded
/// pieces cancel pointwise, so the value is exactly zero when the fold is
/// right.
QuadResult vanishing_integral_check(int k);

/// PV int_0^inf t^{m-1} / (t^n - 1) dt, 1 <= m < n, by subtracting the pole
/// term (1/n)/(t - 1) on both folded halves; the subtracted terms cancel.
QuadResult cauchy_pv(int m, int n, double tol);

/// -(pi/n) cot(m pi / n)
double cauchy_pv_closed(int m, int n);

enum class DensityRole { first, other };

/// Integral over (0, inf) of
///   first: (a/pi) sin(pi/a) / (x^a + 1)
///   other: (2/pi) sin(pi/a) x^{1-2/a} / (x^2 + 1)
QuadResult density_normalization(double a, DensityRole role, double tol);

/// Density of X1/X2 for independent half-Cauchy X1, X2:
/// (4/pi^2) ln z / (z^2 - 1), value 2/pi^2 at z = 1.
double z2_density(double z);

/// CDF of X1/X2. z = +inf gives the total mass. Throws on non-convergence.
double z2_cdf(double z, double tol = 1e-10);
QuadResult z2_cdf_quad(double z, double tol = 1e-10);

}  // namespace polyzeta
