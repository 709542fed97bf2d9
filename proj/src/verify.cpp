#include "polyzeta/verify.hpp"

#include "polyzeta/combinatorial.hpp"
#include "polyzeta/maps.hpp"
#include "polyzeta/parallel.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polyzeta {

namespace {

constexpr double kJacobianTol = 1e-4;
constexpr double kPvTol = 1e-6;
constexpr int kJacobianPoints = 10;
constexpr std::int64_t kMinKsSamples = 10'000;

RouteEntry exact_route(const std::string& name, double v) { return {name, v, 0.0, false}; }

RouteEntry series_route(const SeriesValue& s) {
  return {"series", static_cast<double>(s.value), static_cast<double>(s.tail_bound), false};
}

RouteEntry quad_route(const std::string& name, const QuadResult& q, double scale = 1.0) {
  return {name, q.value * scale, q.abs_error_estimate * std::fabs(scale), false};
}

RouteEntry mc_route(const std::string& name, const Estimate& e) {
  return {name, e.mean, e.std_error, true};
}

void note_quadrature(QuantityRow& row, const QuadResult& q, const std::string& what) {
  if (q.converged) return;
  row.pass = false;
  if (!row.annotation.empty()) row.annotation += "; ";
  row.annotation += what + " quadrature did not converge";
}

QuantityRow make_row(std::string quantity, std::optional<int> k, std::optional<double> a, std::string exact) {
  QuantityRow r;
  r.quantity = std::move(quantity);
  r.k = k;
  r.a = a;
  r.exact = std::move(exact);
  return r;
}

QuantityRow finish(QuantityRow row) {
  evaluate(row);
  return row;
}

}  // namespace

ReportNote zeta_form_note(int k) {
  const PiMultiple unscaled = zeta_2k_unscaled_form(k);
  const PiMultiple via_s = zeta_2k_closed(k);
  const Rational ratio = unscaled.coeff / via_s.coeff;
  std::string text = "zeta(" + std::to_string(2 * k) + "): the tuple-sum form pi^" + std::to_string(2 * k) +
                     "/(2^" + std::to_string(2 * k) + "-1) * (1 + T) gives " + unscaled.exact_string() + " = " +
                     unscaled.decimal_string(12) + ", while 2^" + std::to_string(2 * k) + "/(2^" +
                     std::to_string(2 * k) + "-1) * S(" + std::to_string(2 * k) + ") gives " + via_s.exact_string() +
                     " = " + via_s.decimal_string(12) + ". Ratio " + ratio.get_str() + " = 2^" +
                     std::to_string(2 * k) + ": the tuple-sum form lacks a factor 2^-" + std::to_string(2 * k) +
                     ". Reported zeta values use the S(2k) route";
  if (k == 1) text += ", which reproduces zeta(2) = pi^2/6";
  text += ".";
  return {"zeta_tuple_form_k" + std::to_string(k), text};
}

VerificationReport run_verification(const VerifyConfig& cfg) {
  if (cfg.k_max < 1) throw std::invalid_argument("k-max must be >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(cfg.tol > 0)) throw std::invalid_argument("tol must be positive");
  for (double a : cfg.a_list) {
    if (!(a > 1)) throw std::invalid_argument("every a must be > 1");
  }

  VerificationReport rep;
  const double series_eps = std::min(1e-12, cfg.tol * 1e-2);
  const double quad_tol = std::min(1e-10, cfg.tol * 1e-2);
  rep.metadata = ReportMetadata{kVersion, cfg.seed, cfg.samples, cfg.tol, series_eps, quad_tol,
                                cfg.k_max, cfg.a_list, max_threads()};
  auto& out = rep.quantities;

  for (int k = 1; k <= cfg.k_max; ++k) {
    const Rational vol = volume_delta(k);
    QuantityRow row = make_row("Vol(Delta^k)", k, std::nullopt, vol.get_str());
    row.routes.push_back(exact_route("combinatorial", vol.get_d()));
    row.routes.push_back(mc_route("mc_polytope", mc_delta_volume(k, cfg.samples, cfg.seed)));
    row.routes.push_back(mc_route("mc_hypertope", mc_hypertope_prob(k, cfg.samples, cfg.seed)));
    row.kind = ToleranceKind::relative;
    row.tolerance = cfg.tol;
    row.annotation = "mc routes: 4 sigma vs exact, 5 combined sigma vs each other";
    if (cfg.samples < 10'000) row.annotation += "; under-sampled run (" + std::to_string(cfg.samples) + " samples)";
    out.push_back(finish(std::move(row)));
  }

  for (int k = 1; k <= cfg.k_max; ++k) {
    const PiMultiple closed = s_k_closed(k);
    QuantityRow row = make_row("S(k)", k, std::nullopt, closed.exact_string());
    row.routes.push_back(exact_route("combinatorial", closed.to_double()));
    row.routes.push_back(series_route(s_k_series(k, series_eps)));
    QuadResult jq;
    if (k >= 2) {
      const PiMultiple via_j = s_k_from_jk(k);
      row.routes.push_back(exact_route("jk_closed", via_j.to_double()));
      jq = j_k_quad(k, quad_tol);
      const double scale = 1.0 / (2 * factorial(static_cast<unsigned>(k - 1)).get_d());
      row.routes.push_back(quad_route("jk_quadrature", jq, scale));
      row.annotation = via_j == closed ? "combinatorial and J_k closed forms agree exactly"
                                       : "combinatorial and J_k closed forms DIFFER: " + via_j.exact_string();
    }
    row.tolerance = cfg.tol;
    evaluate(row);
    if (k >= 2) {
      note_quadrature(row, jq, "J_k");
      if (!(s_k_from_jk(k) == closed)) row.pass = false;
    }
    out.push_back(std::move(row));
  }

  for (int k = 2; k <= cfg.k_max; ++k) {
    const PiMultiple closed = j_k_closed(k);
    QuantityRow row = make_row("J_k", k, std::nullopt, closed.exact_string());
    row.routes.push_back(exact_route("bernoulli_euler", closed.to_double()));
    const QuadResult q = j_k_quad(k, quad_tol);
    row.routes.push_back(quad_route("quadrature", q));
    row.tolerance = cfg.tol;
    evaluate(row);
    note_quadrature(row, q, "J_k");
    out.push_back(std::move(row));
  }

  for (int k = 1; k <= std::max(1, cfg.k_max / 2); ++k) {
    const PiMultiple closed = zeta_2k_closed(k);
    QuantityRow row = make_row("zeta(2k)", k, std::nullopt, closed.exact_string());
    row.routes.push_back(exact_route("combinatorial", closed.to_double()));
    row.routes.push_back(series_route(zeta_2k_series(k, series_eps)));
    const BigInt p = pow2(static_cast<unsigned>(2 * k));
    row.routes.push_back(exact_route("jk_closed", (make_rational(p, p - 1) * s_k_from_jk(2 * k)).to_double()));
    row.tolerance = cfg.tol;
    out.push_back(finish(std::move(row)));
  }

  const int ska_max = std::max(3, std::min(cfg.k_max, 8));
  for (double a : cfg.a_list) {
    for (int k = 2; k <= ska_max; ++k) {
      QuantityRow row = make_row("S(k,a)", k, a, "");
      if (k == 2) row.routes.push_back(exact_route("closed", s_2a_closed(a)));
      if (k == 3) row.routes.push_back(exact_route("closed", s_3a_closed(a)));
      row.routes.push_back(series_route(s_ka_series(k, a, series_eps)));
      const QuadResult q = j_ka_quad(k, a, quad_tol);
      row.routes.push_back(quad_route("jka_quadrature", q, 1.0 / factorial(static_cast<unsigned>(k - 1)).get_d()));
      row.tolerance = cfg.tol;
      evaluate(row);
      note_quadrature(row, q, "J_{k,a}");
      out.push_back(std::move(row));
    }
  }

  {
    std::mt19937_64 g = make_stream(cfg.seed, StreamTag::points, 0);
    for (int k = 2; k <= std::max(2, std::min(cfg.k_max, 6)); ++k) {
      JacobianComparison worst_trig{1.0, 1.0};
      JacobianComparison worst_zagier{1.0, 1.0};
      for (int i = 0; i < kJacobianPoints; ++i) {
        const auto t = compare_trig_jacobian(sample_delta_interior(k, g));
        if (t.rel_error() >= worst_trig.rel_error()) worst_trig = t;
        const auto z = compare_zagier_jacobian(sample_hypertope_interior(k, g));
        if (z.rel_error() >= worst_zagier.rel_error()) worst_zagier = z;
      }
      for (const auto& [name, cmp] : {std::pair{"trig_jacobian", worst_trig}, std::pair{"zagier_jacobian", worst_zagier}}) {
        QuantityRow row = make_row(name, k, std::nullopt, "");
        row.routes.push_back(exact_route("closed", cmp.closed));
        row.routes.push_back(exact_route("finite_difference", cmp.numeric));
        row.tolerance = kJacobianTol;
        row.annotation = "worst of " + std::to_string(kJacobianPoints) + " random interior points";
        out.push_back(finish(std::move(row)));
      }
    }
  }

  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m < n; ++m) {
      QuantityRow row = make_row("PV(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")", std::nullopt, std::nullopt,
                      "-(pi/" + std::to_string(n) + ") cot(" + std::to_string(m) + " pi/" + std::to_string(n) + ")");
      row.routes.push_back(exact_route("closed", cauchy_pv_closed(m, n)));
      const QuadResult q = cauchy_pv(m, n, quad_tol);
      row.routes.push_back(quad_route("pole_subtraction", q));
      row.kind = ToleranceKind::absolute;
      row.tolerance = kPvTol;
      evaluate(row);
      note_quadrature(row, q, "PV");
      out.push_back(std::move(row));
    }
  }

  for (int k = 1; k <= 6; ++k) {
    QuantityRow row = make_row("vanishing_integral", k, std::nullopt, "0");
    row.routes.push_back(exact_route("zero", 0.0));
    row.routes.push_back(quad_route("folded_quadrature", vanishing_integral_check(k)));
    row.kind = ToleranceKind::absolute;
    row.tolerance = 0.0;
    out.push_back(finish(std::move(row)));
  }

  for (double a : cfg.a_list) {
    for (auto role : {DensityRole::first, DensityRole::other}) {
      QuantityRow row = make_row(role == DensityRole::first ? "density_norm(first)" : "density_norm(other)", std::nullopt, a, "1");
      row.routes.push_back(exact_route("unit_mass", 1.0));
      const QuadResult q = density_normalization(a, role, quad_tol);
      row.routes.push_back(quad_route("quadrature", q));
      row.tolerance = cfg.tol;
      evaluate(row);
      note_quadrature(row, q, "density");
      out.push_back(std::move(row));
    }
  }

  {
    QuantityRow half = make_row("Z2_cdf(1)", std::nullopt, std::nullopt, "1/2");
    half.routes.push_back(exact_route("symmetry", 0.5));
    half.routes.push_back(exact_route("quadrature", z2_cdf(1.0, quad_tol)));
    half.tolerance = cfg.tol;
    out.push_back(finish(std::move(half)));

    QuantityRow mass = make_row("Z2_cdf(inf)", std::nullopt, std::nullopt, "1");
    mass.routes.push_back(exact_route("unit_mass", 1.0));
    mass.routes.push_back(exact_route("quadrature", z2_cdf(INFINITY, quad_tol)));
    mass.tolerance = cfg.tol;
    out.push_back(finish(std::move(mass)));

    if (cfg.samples >= kMinKsSamples) {
      const Z2Check ks = z2_distribution_check(cfg.samples, cfg.seed, 1e-9);
      QuantityRow row = make_row("Z2_ks", std::nullopt, std::nullopt, "");
      row.routes.push_back({"ks_statistic", ks.statistic, 0.0, true});
      row.kind = ToleranceKind::threshold;
      row.tolerance = ks.threshold;
      row.annotation = "threshold 1.95/sqrt(n); sample median " + std::to_string(ks.median);
      evaluate(row);
      if (!row.pass) row.annotation += "; statistical miss: KS statistic above threshold";
      out.push_back(std::move(row));
    } else {
      rep.notes.push_back({"z2_ks_skipped", "KS check of X1/X2 needs at least 10^4 samples; skipped at " +
                                                std::to_string(cfg.samples) + "."});
    }
  }

  rep.notes.push_back(zeta_form_note(1));
  if (cfg.k_max >= 4) rep.notes.push_back(zeta_form_note(2));
  return rep;
}

}  // namespace polyzeta
