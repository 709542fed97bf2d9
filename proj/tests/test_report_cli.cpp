#include "doctest.h"
#include "json.hpp"
#include "polyzeta/cli.hpp"
#include "polyzeta/report.hpp"
#include "polyzeta/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyzeta;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "polyzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

QuantityRow row(std::vector<RouteEntry> routes, ToleranceKind kind, double tol) {
  QuantityRow r;
  r.quantity = "X";
  r.routes = std::move(routes);
  r.kind = kind;
  r.tolerance = tol;
  return r;
}

VerifyConfig small_config() {
  VerifyConfig c;
  c.k_max = 2;
  c.samples = 2000;
  c.a_list = {3.0};
  return c;
}

}  // namespace

TEST_CASE("evaluate: relative and absolute") {
  auto r = row({{"a", 1.0, 0, false}, {"b", 1.0 + 1e-9, 0, false}}, ToleranceKind::relative, 1e-8);
  evaluate(r);
  CHECK(r.pass);
  CHECK(r.max_rel_discrepancy == doctest::Approx(1e-9));
  r.routes.push_back({"c", 1.0 + 1e-7, 0, false});
  evaluate(r);
  CHECK_FALSE(r.pass);
  auto ab = row({{"a", 100.0, 0, false}, {"b", 100.5, 0, false}}, ToleranceKind::absolute, 0.1);
  evaluate(ab);
  CHECK_FALSE(ab.pass);
  ab.tolerance = 1.0;
  evaluate(ab);
  CHECK(ab.pass);
}

TEST_CASE("evaluate: statistical routes use sigma limits") {
  auto r = row({{"exact", 0.5, 0, false}, {"mc", 0.5 + 3.9e-3, 1e-3, true}}, ToleranceKind::relative, 1e-8);
  evaluate(r);
  CHECK(r.pass);
  r.routes[1].value = 0.5 + 4.1e-3;
  evaluate(r);
  CHECK_FALSE(r.pass);
  CHECK(r.annotation.find("statistical miss") != std::string::npos);

  auto pair = row({{"exact", 0.5, 0, false}, {"m1", 0.5 + 3.5e-3, 1e-3, true}, {"m2", 0.5 - 3.5e-3, 1e-3, true}},
                  ToleranceKind::relative, 1e-8);
  evaluate(pair);
  CHECK(pair.pass);  // 7e-3 apart, limit 5 * sqrt(2) * 1e-3
  pair.routes[2].value = 0.5 - 3.9e-3;
  evaluate(pair);
  CHECK_FALSE(pair.pass);
}

TEST_CASE("evaluate: threshold") {
  auto r = row({{"ks", 0.001, 0, false}}, ToleranceKind::threshold, 0.002);
  evaluate(r);
  CHECK(r.pass);
  CHECK(r.max_rel_discrepancy == doctest::Approx(0.5));
  r.routes[0].value = 0.003;
  evaluate(r);
  CHECK_FALSE(r.pass);
}

TEST_CASE("JSON round trip of a real report") {
  const VerificationReport rep = run_verification(small_config());
  const nlohmann::json j = rep;
  const VerificationReport back = nlohmann::json::parse(j.dump()).get<VerificationReport>();
  CHECK(back == rep);
  CHECK(j.contains("quantities"));
  CHECK(j.contains("metadata"));
  CHECK(j.at("metadata").at("seed") == 42);
}

TEST_CASE("report is deterministic for a fixed seed") {
  const nlohmann::json a = run_verification(small_config());
  const nlohmann::json b = run_verification(small_config());
  CHECK(a == b);
}

TEST_CASE("report carries the zeta form note") {
  const VerificationReport rep = run_verification(small_config());
  bool found = false;
  for (const auto& n : rep.notes) {
    if (n.id == "zeta_tuple_form_k1") {
      found = true;
      CHECK(n.text.find("Ratio 4 = 2^2") != std::string::npos);
      CHECK(n.text.find("pi^2/6") != std::string::npos);
    }
  }
  CHECK(found);
  CHECK(rep.all_pass());
}

TEST_CASE("tolerance kind names") {
  for (auto k : {ToleranceKind::relative, ToleranceKind::absolute, ToleranceKind::threshold}) {
    CHECK(parse_tolerance_kind(tolerance_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_tolerance_kind("loose"), std::invalid_argument);
}

TEST_CASE("cli closed and zeta") {
  auto r = run({"closed", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("π^4 * 1/96") != std::string::npos);
  CHECK(r.out.find("1.01467803160419") != std::string::npos);
  CHECK(r.out.find("1/6") != std::string::npos);

  r = run({"zeta", "--k", "1", "--digits", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("π^2 * 1/6") != std::string::npos);
  CHECK(r.out.find("1.6449340668482264365") != std::string::npos);

  r = run({"zeta", "--k", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("coeff") == "1/90");
  CHECK(j.at("pi_power") == 4);
}

TEST_CASE("cli ska and tuples") {
  auto r = run({"ska", "--k", "2", "--a", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.46740110027234") != std::string::npos);
  r = run({"tuples", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,3)  alpha=(2,0)  term=1/12") != std::string::npos);
  CHECK(r.out.find("1/6") != std::string::npos);
  r = run({"tuples", "--k", "5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("count_per_n") == nlohmann::json::array({5, 10}));
  CHECK(run({"tuples", "--k", "20"}).code == 2);
}

TEST_CASE("cli verify formats") {
  auto r = run({"verify", "--k-max", "1", "--samples", "100", "--a", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ALL PASS") != std::string::npos);

  r = run({"verify", "--k-max", "1", "--samples", "100", "--a", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("quantity,k,a,route,value,uncertainty,pass\n", 0) == 0);

  r = run({"verify", "--k-max", "1", "--samples", "100", "--a", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("metadata").at("samples") == 100);
  CHECK(j.at("pass") == true);
}

TEST_CASE("cli seed comes from POLYZETA_SEED unless --seed is given") {
  setenv("POLYZETA_SEED", "777", 1);
  auto r = run({"verify", "--k-max", "1", "--samples", "100", "--a", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).at("metadata").at("seed") == 777);
  r = run({"verify", "--k-max", "1", "--samples", "100", "--a", "3", "--seed", "5", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).at("metadata").at("seed") == 5);
  setenv("POLYZETA_SEED", "abc", 1);
  CHECK(run({"verify", "--k-max", "1", "--samples", "100"}).code == 2);
  unsetenv("POLYZETA_SEED");
}

TEST_CASE("cli writes --out files") {
  const auto path = std::filesystem::temp_directory_path() / "polyzeta_cli_out.txt";
  auto r = run({"closed", "--k", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body.find("π^2 * 1/8") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"closed", "--k", "2", "--out", "/nonexistent-dir/x.txt"}).code == 2);
}

TEST_CASE("cli exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"closed"}).code == 2);
  CHECK(run({"closed", "--k", "0"}).code == 2);
  CHECK(run({"closed", "--k", "x"}).code == 2);
  CHECK(run({"closed", "--k", "3", "--digits", "31"}).code == 2);
  CHECK(run({"closed", "--k", "3", "--format", "xml"}).code == 2);
  CHECK(run({"ska", "--k", "2", "--a", "1"}).code == 2);
  CHECK(run({"verify", "--k-max", "0"}).code == 2);
  CHECK(run({"verify", "--samples", "10.5"}).code == 2);
  CHECK(run({"verify", "--tol", "-1"}).code == 2);
  CHECK(run({"verify", "--a", "0.5"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}
