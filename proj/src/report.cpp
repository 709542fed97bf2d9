#include "polyzeta/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace polyzeta {

namespace {

constexpr double kSigmaSingle = 4.0;
constexpr double kSigmaPair = 5.0;

std::string fmt(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(quantities.begin(), quantities.end(), [](const QuantityRow& q) { return q.pass; });
}

void evaluate(QuantityRow& row) {
  row.max_rel_discrepancy = 0.0;
  row.pass = !row.routes.empty();
  if (row.routes.empty()) return;

  const RouteEntry& ref = row.routes.front();
  const double scale = std::fabs(ref.value) > 0 ? std::fabs(ref.value) : 1.0;
  std::string misses;

  if (row.kind == ToleranceKind::threshold) {
    for (const auto& r : row.routes) {
      row.max_rel_discrepancy = std::max(row.max_rel_discrepancy, r.value / row.tolerance);
      if (!(r.value <= row.tolerance)) row.pass = false;
    }
    return;
  }

  for (std::size_t i = 0; i < row.routes.size(); ++i) {
    for (std::size_t j = i + 1; j < row.routes.size(); ++j) {
      const RouteEntry& a = row.routes[i];
      const RouteEntry& b = row.routes[j];
      const double diff = std::fabs(a.value - b.value);
      row.max_rel_discrepancy = std::max(row.max_rel_discrepancy, diff / scale);
      if (a.statistical || b.statistical) {
        const bool both = a.statistical && b.statistical;
        const double sigma = both ? std::hypot(a.uncertainty, b.uncertainty)
                                  : (a.statistical ? a.uncertainty : b.uncertainty);
        const double limit = (both ? kSigmaPair : kSigmaSingle) * sigma;
        if (!(diff <= limit)) {
          row.pass = false;
          const double z = sigma > 0 ? diff / sigma : INFINITY;
          misses += " " + a.route + " vs " + b.route + " differ by " + fmt(z, 3) + " sigma (limit " +
                    fmt(both ? kSigmaPair : kSigmaSingle, 2) + ")";
        }
        continue;
      }
      const double limit = row.kind == ToleranceKind::relative ? row.tolerance * scale : row.tolerance;
      if (!(diff <= limit)) row.pass = false;
    }
  }
  if (!misses.empty()) {
    if (!row.annotation.empty()) row.annotation += "; ";
    row.annotation += "statistical miss:" + misses;
  }
}

std::string tolerance_kind_name(ToleranceKind k) {
  switch (k) {
    case ToleranceKind::relative: return "relative";
    case ToleranceKind::absolute: return "absolute";
    case ToleranceKind::threshold: return "threshold";
  }
  return "relative";
}

ToleranceKind parse_tolerance_kind(const std::string& s) {
  if (s == "relative") return ToleranceKind::relative;
  if (s == "absolute") return ToleranceKind::absolute;
  if (s == "threshold") return ToleranceKind::threshold;
  throw std::invalid_argument("unknown tolerance kind: " + s);
}

void to_json(nlohmann::json& j, const RouteEntry& r) {
  j = {{"route", r.route}, {"value", r.value}, {"uncertainty", r.uncertainty}, {"statistical", r.statistical}};
}

void from_json(const nlohmann::json& j, RouteEntry& r) {
  j.at("route").get_to(r.route);
  j.at("value").get_to(r.value);
  j.at("uncertainty").get_to(r.uncertainty);
  j.at("statistical").get_to(r.statistical);
}

void to_json(nlohmann::json& j, const QuantityRow& r) {
  j = {{"quantity", r.quantity},
       {"k", r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr)},
       {"a", r.a ? nlohmann::json(*r.a) : nlohmann::json(nullptr)},
       {"exact", r.exact},
       {"routes", r.routes},
       {"tolerance_kind", tolerance_kind_name(r.kind)},
       {"tolerance", r.tolerance},
       {"max_rel_discrepancy", r.max_rel_discrepancy},
       {"pass", r.pass},
       {"annotation", r.annotation}};
}

void from_json(const nlohmann::json& j, QuantityRow& r) {
  j.at("quantity").get_to(r.quantity);
  r.k = j.at("k").is_null() ? std::nullopt : std::optional<int>(j.at("k").get<int>());
  r.a = j.at("a").is_null() ? std::nullopt : std::optional<double>(j.at("a").get<double>());
  j.at("exact").get_to(r.exact);
  j.at("routes").get_to(r.routes);
  r.kind = parse_tolerance_kind(j.at("tolerance_kind").get<std::string>());
  j.at("tolerance").get_to(r.tolerance);
  j.at("max_rel_discrepancy").get_to(r.max_rel_discrepancy);
  j.at("pass").get_to(r.pass);
  j.at("annotation").get_to(r.annotation);
}

void to_json(nlohmann::json& j, const ReportNote& n) { j = {{"id", n.id}, {"text", n.text}}; }

void from_json(const nlohmann::json& j, ReportNote& n) {
  j.at("id").get_to(n.id);
  j.at("text").get_to(n.text);
}

void to_json(nlohmann::json& j, const ReportMetadata& m) {
  j = {{"version", m.version},   {"seed", m.seed},         {"samples", m.samples},
       {"tol", m.tol},           {"series_eps", m.series_eps}, {"quad_tol", m.quad_tol},
       {"k_max", m.k_max},       {"a_list", m.a_list},     {"threads", m.threads}};
}

void from_json(const nlohmann::json& j, ReportMetadata& m) {
  j.at("version").get_to(m.version);
  j.at("seed").get_to(m.seed);
  j.at("samples").get_to(m.samples);
  j.at("tol").get_to(m.tol);
  j.at("series_eps").get_to(m.series_eps);
  j.at("quad_tol").get_to(m.quad_tol);
  j.at("k_max").get_to(m.k_max);
  j.at("a_list").get_to(m.a_list);
  j.at("threads").get_to(m.threads);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"quantities", r.quantities}, {"notes", r.notes}, {"metadata", r.metadata}, {"pass", r.all_pass()}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("quantities").get_to(r.quantities);
  j.at("notes").get_to(r.notes);
  j.at("metadata").get_to(r.metadata);
}

namespace {

std::string label(const QuantityRow& q) {
  std::string s = q.quantity;
  if (q.k) s += " k=" + std::to_string(*q.k);
  if (q.a) s += " a=" + fmt(*q.a, 6);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_text(std::ostream& os, const VerificationReport& r, int digits) {
  for (const auto& q : r.quantities) {
    os << (q.pass ? "[PASS] " : "[FAIL] ") << label(q);
    if (!q.exact.empty()) os << "  exact: " << q.exact;
    os << "  (" << tolerance_kind_name(q.kind) << " tol " << fmt(q.tolerance, 3)
       << ", max rel discrepancy " << fmt(q.max_rel_discrepancy, 3) << ")\n";
    for (const auto& rt : q.routes) {
      os << "    " << std::left << std::setw(22) << rt.route << std::right << fmt(rt.value, digits);
      if (rt.uncertainty > 0) os << (rt.statistical ? "  +- " : "  err<= ") << fmt(rt.uncertainty, 3);
      os << "\n";
    }
    if (!q.annotation.empty()) os << "    note: " << q.annotation << "\n";
  }
  if (!r.notes.empty()) {
    os << "\nNotes\n";
    for (const auto& n : r.notes) os << "  [" << n.id << "] " << n.text << "\n";
  }
  const auto& m = r.metadata;
  os << "\nseed=" << m.seed << " samples=" << m.samples << " tol=" << fmt(m.tol, 3) << " k_max=" << m.k_max
     << " threads=" << m.threads << " version=" << m.version << "\n";
  const auto failed = std::count_if(r.quantities.begin(), r.quantities.end(), [](const QuantityRow& q) { return !q.pass; });
  os << (failed == 0 ? "ALL PASS" : "FAILED") << " (" << r.quantities.size() - static_cast<std::size_t>(failed) << "/"
     << r.quantities.size() << " quantities)\n";
}

void write_csv(std::ostream& os, const VerificationReport& r, int digits) {
  os << "quantity,k,a,route,value,uncertainty,pass\n";
  for (const auto& q : r.quantities) {
    for (const auto& rt : q.routes) {
      os << csv_field(q.quantity) << ',' << (q.k ? std::to_string(*q.k) : "") << ','
         << (q.a ? fmt(*q.a, 17) : "") << ',' << csv_field(rt.route) << ',' << fmt(rt.value, digits) << ','
         << fmt(rt.uncertainty, 6) << ',' << (q.pass ? "true" : "false") << '\n';
    }
  }
}

}  // namespace polyzeta
