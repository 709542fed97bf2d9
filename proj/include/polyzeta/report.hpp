#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polyzeta {

struct RouteEntry {
  std::string route;
  double value = 0.0;
  double uncertainty = 0.0;
  bool statistical = false;  // Monte Carlo: uncertainty is one standard error

  bool operator==(const RouteEntry&) const = default;
};

/// How a quantity's routes are compared.
///   relative:    |v_i - v_j| <= tolerance * |reference|, all pairs
///   absolute:    |v_i - v_j| <= tolerance, all pairs
///   threshold:   every route value <= tolerance
/// Statistical routes are always held to 4 sigma against the deterministic
/// reference and to 5 combined sigma against each other.
enum class ToleranceKind { relative, absolute, threshold };

struct QuantityRow {
  std::string quantity;            // "S(k)", "zeta(2k)", "S(k,a)", "J_k", "Vol(Delta^k)", ...
  std::optional<int> k;
  std::optional<double> a;
  std::string exact;               // exact form when one exists
  std::vector<RouteEntry> routes;  // routes[0] is the reference
  ToleranceKind kind = ToleranceKind::relative;
  double tolerance = 0.0;
  double max_rel_discrepancy = 0.0;
  bool pass = false;
  std::string annotation;

  bool operator==(const QuantityRow&) const = default;
};

struct ReportNote {
  std::string id;
  std::string text;

  bool operator==(const ReportNote&) const = default;
};

struct ReportMetadata {
  std::string version;
  std::uint64_t seed = 0;
  std::int64_t samples = 0;
  double tol = 0.0;
  double series_eps = 0.0;
  double quad_tol = 0.0;
  int k_max = 0;
  std::vector<double> a_list;
  int threads = 1;

  bool operator==(const ReportMetadata&) const = default;
};

struct VerificationReport {
  std::vector<QuantityRow> quantities;
  std::vector<ReportNote> notes;
  ReportMetadata metadata;

  bool all_pass() const;
  bool operator==(const VerificationReport&) const = default;
};

/// Fills max_rel_discrepancy and pass from the routes, kind and tolerance.
/// The annotation is extended when a statistical route misses.
void evaluate(QuantityRow& row);

void to_json(nlohmann::json& j, const RouteEntry& r);
void from_json(const nlohmann::json& j, RouteEntry& r);
void to_json(nlohmann::json& j, const QuantityRow& r);
void from_json(const nlohmann::json& j, QuantityRow& r);
void to_json(nlohmann::json& j, const ReportNote& n);
void from_json(const nlohmann::json& j, ReportNote& n);
void to_json(nlohmann::json& j, const ReportMetadata& m);
void from_json(const nlohmann::json& j, ReportMetadata& m);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

std::string tolerance_kind_name(ToleranceKind k);
ToleranceKind parse_tolerance_kind(const std::string& s);

void write_text(std::ostream& os, const VerificationReport& r, int digits);
/// quantity,k,a,route,value,uncertainty,pass
void write_csv(std::ostream& os, const VerificationReport& r, int digits);

}  // namespace polyzeta
