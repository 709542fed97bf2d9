#include "polyzeta/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "polyzeta/combinatorial.hpp"
#include "polyzeta/parallel.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace polyzeta {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  int digits = 15;
  std::string format = "text";
  std::string out_file;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--digits", o.digits, "Significant digits in decimal output")->check(CLI::Range(1, 30));
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("POLYZETA_SEED");
  if (env == nullptr || *env == '\0') return 42;
  std::size_t pos = 0;
  const std::string s(env);
  const unsigned long long v = std::stoull(s, &pos, 10);
  if (pos != s.size()) throw std::invalid_argument("POLYZETA_SEED is not an unsigned integer: " + s);
  return v;
}

std::string fmt(long double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// Emits `body` to stdout or --out.
int emit(const CommonOptions& o, const std::string& body, std::ostream& out, std::ostream& err) {
  if (o.out_file.empty()) {
    out << body;
    return kExitOk;
  }
  std::ofstream f(o.out_file);
  if (!f) {
    err << "error: cannot open " << o.out_file << " for writing\n";
    return kExitUsage;
  }
  f << body;
  return kExitOk;
}

std::string pi_multiple_output(const std::string& name, int k, const PiMultiple& v, const CommonOptions& o,
                               const std::string& extra_key = {}, const std::string& extra_value = {}) {
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::json j{{"quantity", name},
                     {"k", k},
                     {"exact", v.exact_string()},
                     {"coeff", v.coeff.get_str()},
                     {"pi_power", v.pi_power},
                     {"decimal", v.decimal_string(o.digits)}};
    if (!extra_key.empty()) j[extra_key] = extra_value;
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "quantity,k,exact,decimal\n" << name << ',' << k << ',' << v.exact_string() << ','
       << v.decimal_string(o.digits) << "\n";
  } else {
    os << name << " = " << v.exact_string() << " ≈ " << v.decimal_string(o.digits) << "\n";
    if (!extra_key.empty()) os << extra_key << " = " << extra_value << "\n";
  }
  return os.str();
}

std::string ska_output(int k, double a, const CommonOptions& o) {
  const int digits = std::min(o.digits, 17);
  std::string route;
  long double value = 0;
  long double bound = 0;
  if (k == 2 || k == 3) {
    value = k == 2 ? s_2a_closed(a) : s_3a_closed(a);
    route = "closed form";
  } else {
    const SeriesValue s = s_ka_series(k, a, 1e-13);
    value = s.value;
    bound = s.tail_bound;
    route = "series";
  }
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::json j{{"quantity", "S(k,a)"}, {"k", k}, {"a", a}, {"route", route},
                     {"value", static_cast<double>(value)}, {"decimal", fmt(value, digits)}};
    if (bound > 0) j["tail_bound"] = static_cast<double>(bound);
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "quantity,k,a,route,value\nS(k;a)," << k << ',' << fmt(a, 17) << ',' << route << ',' << fmt(value, digits)
       << "\n";
  } else {
    os << "S(" << k << "," << fmt(a, 10) << ") ≈ " << fmt(value, digits) << " (" << route;
    if (bound > 0) os << ", tail bound " << fmt(bound, 3);
    os << ")\n";
  }
  return os.str();
}

std::string tuples_output(int k, const CommonOptions& o) {
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  TupleSum totals{Rational(0), std::vector<std::uint64_t>(static_cast<std::size_t>(k / 2) + 1, 0)};
  for (int n = 1; n <= k / 2; ++n) {
    AdmissibleStream s(k, n);
    while (auto t = s.next()) {
      const AlphaVector a = alpha_exponents(*t);
      const Rational term = tuple_term(a);
      totals.sum += term;
      ++totals.count_per_n[static_cast<std::size_t>(n)];
      if (o.format == "json") {
        rows.push_back({{"tuple", t->entries}, {"alpha", a.alphas}, {"term", term.get_str()}});
      } else if (o.format == "csv") {
        auto join = [](const std::vector<int>& v) {
          std::string r;
          for (std::size_t i = 0; i < v.size(); ++i) r += (i ? " " : "") + std::to_string(v[i]);
          return r;
        };
        os << n << ',' << join(t->entries) << ',' << join(a.alphas) << ',' << term.get_str() << "\n";
      } else {
        os << "(";
        for (std::size_t i = 0; i < t->entries.size(); ++i) os << (i ? "," : "") << t->entries[i];
        os << ")  alpha=(";
        for (std::size_t i = 0; i < a.alphas.size(); ++i) os << (i ? "," : "") << a.alphas[i];
        os << ")  term=" << term.get_str() << "\n";
      }
    }
  }
  const Rational vol = (Rational(1) + totals.sum) / Rational(pow2(static_cast<unsigned>(k)));
  if (o.format == "json") {
    std::vector<std::uint64_t> counts(totals.count_per_n.begin() + 1, totals.count_per_n.end());
    nlohmann::json j{{"k", k}, {"tuples", rows}, {"count_per_n", counts}, {"volume", vol.get_str()}};
    return j.dump(2) + "\n";
  }
  if (o.format == "csv") return "n,tuple,alpha,term\n" + os.str() + "volume," + vol.get_str() + "\n";
  std::uint64_t total = 0;
  for (std::size_t n = 1; n < totals.count_per_n.size(); ++n) {
    os << (n > 1 ? " " : "") << "n=" << n << ":" << totals.count_per_n[n];
    total += totals.count_per_n[n];
  }
  os << (k / 2 >= 1 ? " " : "") << "total=" << total << "  Vol(Delta^" << k << ") = " << vol.get_str() << "\n";
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact, series, quadrature and Monte Carlo routes to S(k), zeta(2k) and S(k,a)", "polyzeta"};
  app.require_subcommand(1);

  CommonOptions common;
  int k = 0;
  double a = 0;

  auto* closed = app.add_subcommand("closed", "Exact S(k) from the polytope volume");
  closed->add_option("--k", k, "k >= 1")->required();
  add_common(closed, common);

  auto* zeta = app.add_subcommand("zeta", "Exact zeta(2k) through S(2k)");
  zeta->add_option("--k", k, "k >= 1")->required();
  add_common(zeta, common);

  auto* ska = app.add_subcommand("ska", "S(k,a), closed form for k = 2, 3");
  ska->add_option("--k", k, "k >= 2")->required();
  ska->add_option("--a", a, "a > 1")->required();
  add_common(ska, common);

  int cap = 16;
  auto* tuples = app.add_subcommand("tuples", "List admissible tuples, alpha vectors and terms");
  tuples->add_option("--k", k, "k >= 2")->required();
  tuples->add_option("--cap", cap, "Largest k accepted");
  add_common(tuples, common);

  VerifyConfig vcfg;
  double samples = static_cast<double>(vcfg.samples);
  std::vector<double> a_list;
  std::uint64_t seed = 0;
  int threads = 0;
  auto* verify = app.add_subcommand("verify", "Run every route and report agreement");
  verify->add_option("--k-max", vcfg.k_max, "Largest k");
  verify->add_option("--a", a_list, "Values of a for S(k,a) (repeatable)");
  verify->add_option("--samples", samples, "Monte Carlo samples per estimate");
  auto* seed_opt = verify->add_option("--seed", seed, "Seed (default: $POLYZETA_SEED or 42)");
  verify->add_option("--tol", vcfg.tol, "Relative tolerance for deterministic routes");
  verify->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (closed->parsed()) {
      if (k < 1) throw std::invalid_argument("--k must be >= 1");
      return emit(common,
                  pi_multiple_output("S(" + std::to_string(k) + ")", k, s_k_closed(k), common,
                                     "Vol(Delta^" + std::to_string(k) + ")", volume_delta(k).get_str()),
                  out, err);
    }
    if (zeta->parsed()) {
      if (k < 1) throw std::invalid_argument("--k must be >= 1");
      return emit(common, pi_multiple_output("zeta(" + std::to_string(2 * k) + ")", k, zeta_2k_closed(k), common), out,
                  err);
    }
    if (ska->parsed()) {
      if (k < 2) throw std::invalid_argument("--k must be >= 2");
      if (!(a > 1)) throw std::invalid_argument("--a must be > 1");
      return emit(common, ska_output(k, a, common), out, err);
    }
    if (tuples->parsed()) {
      if (k < 2) throw std::invalid_argument("--k must be >= 2");
      if (k > cap) throw std::invalid_argument("--k above cap " + std::to_string(cap));
      return emit(common, tuples_output(k, common), out, err);
    }
    if (verify->parsed()) {
      if (!(samples >= 1) || samples != std::floor(samples) || samples > 9e15) {
        throw std::invalid_argument("--samples must be a positive integer");
      }
      vcfg.samples = static_cast<std::int64_t>(samples);
      vcfg.seed = seed_opt->count() > 0 ? seed : default_seed();
      if (!a_list.empty()) vcfg.a_list = a_list;
      if (threads < 0) throw std::invalid_argument("--threads must be >= 0");
      set_threads(threads);
      const VerificationReport rep = run_verification(vcfg);
      std::ostringstream os;
      if (common.format == "json") {
        os << nlohmann::json(rep).dump(2) << "\n";
      } else if (common.format == "csv") {
        write_csv(os, rep, common.digits);
      } else {
        write_text(os, rep, common.digits);
      }
      const int rc = emit(common, os.str(), out, err);
      if (rc != kExitOk) return rc;
      return rep.all_pass() ? kExitOk : kExitFail;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polyzeta
