#include "doctest.h"
#include "oracles.hpp"
#include "polyzeta/combinatorial.hpp"
#include "polyzeta/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <set>

using namespace polyzeta;

namespace {

std::vector<std::vector<int>> entries(const std::vector<AdmissibleTuple>& ts) {
  std::vector<std::vector<int>> out;
  for (const auto& t : ts) out.push_back(t.entries);
  return out;
}

}  // namespace

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible(4, std::vector<int>{1, 3}));
  CHECK_FALSE(is_admissible(4, std::vector<int>{1, 2}));
  CHECK_FALSE(is_admissible(4, std::vector<int>{1, 4}));
  CHECK_FALSE(is_admissible(5, std::vector<int>{2, 2}));
  CHECK_FALSE(is_admissible(5, std::vector<int>{0, 3}));
  CHECK_FALSE(is_admissible(5, std::vector<int>{6}));
  CHECK(is_admissible(5, std::vector<int>{}));
}

TEST_CASE("enumerate_admissible examples") {
  CHECK(entries(enumerate_admissible(2, 1)) == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(entries(enumerate_admissible(4, 2)) == std::vector<std::vector<int>>{{1, 3}, {2, 4}, {3, 1}, {4, 2}});
  CHECK(enumerate_admissible(5, 2).size() == 10);
  CHECK(enumerate_admissible(5, 3).empty());
  CHECK_THROWS_AS(AdmissibleStream(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(AdmissibleStream(4, 0), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic, unique and admissible") {
  for (int k = 2; k <= 9; ++k) {
    for (int n = 1; n <= k / 2; ++n) {
      const auto all = entries(enumerate_admissible(k, n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::set<std::vector<int>>(all.begin(), all.end()).size() == all.size());
      for (const auto& e : all) CHECK(is_admissible(k, e));
    }
  }
}

TEST_CASE("enumeration counts match brute force over [k]^n and the cycle formula") {
  for (int k = 2; k <= 10; ++k) {
    for (int n = 1; n <= k / 2; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const std::uint64_t brute = oracle::brute_force_count(k, n);
      CHECK(enumerate_admissible(k, n).size() == brute);
      CHECK(ordered_cycle_independent_sets(k, n) == BigInt(static_cast<unsigned long>(brute)));
    }
  }
}

TEST_CASE("alpha exponent examples") {
  CHECK(alpha_exponents({2, {1}}).alphas == std::vector<int>{1});
  CHECK(alpha_exponents({2, {2}}).alphas == std::vector<int>{1});
  CHECK(alpha_exponents({4, {1, 3}}).alphas == std::vector<int>{2, 0});
  CHECK(alpha_exponents({5, {1, 3}}).alphas == std::vector<int>{2, 1});
  CHECK(alpha_exponents({5, {1, 4}}).alphas == std::vector<int>{2, 1});  // |1-4| = 3 = k-2
  CHECK(alpha_exponents({6, {1, 3, 5}}).alphas == std::vector<int>{2, 1, 0});
}

TEST_CASE("alpha vectors stay in {0,1,2} with the fixed leading entry") {
  for (int k = 2; k <= 11; ++k) {
    for (int n = 1; n <= k / 2; ++n) {
      for (const auto& t : enumerate_admissible(k, n)) {
        const auto a = alpha_exponents(t).alphas;
        REQUIRE(a.size() == static_cast<std::size_t>(n));
        CHECK(a[0] == 2 - (k == 2 ? 1 : 0));
        int sum = 0;
        for (int x : a) {
          CHECK(x >= 0);
          CHECK(x <= 2);
          sum += x;
        }
        CHECK(sum <= 2 * n);
      }
    }
  }
}

TEST_CASE("tuple_term examples") {
  CHECK(tuple_term({{1}}) == make_rational(1, 2));
  CHECK(tuple_term({{2}}) == make_rational(1, 3));
  CHECK(tuple_term({{2, 0}}) == make_rational(1, 12));
  CHECK(tuple_term({{2, 1, 0}}) == make_rational(1, 3 * 5 * 6));
}

TEST_CASE("volume_delta examples") {
  CHECK(volume_delta(1) == make_rational(1, 2));
  CHECK(volume_delta(2) == make_rational(1, 2));
  CHECK(volume_delta(3) == make_rational(1, 4));
  CHECK(volume_delta(4) == make_rational(1, 6));
  CHECK_THROWS_AS(volume_delta(0), std::invalid_argument);
  CHECK_THROWS_AS(volume_delta(-3), std::invalid_argument);
}

TEST_CASE("OpenMP kernel agrees with the serial reference") {
  for (int k = 1; k <= 13; ++k) {
    CAPTURE(k);
    const TupleSum fast = tuple_sum(k);
    const TupleSum ref = reference::tuple_sum(k);
    CHECK(fast.sum == ref.sum);
    CHECK(fast.count_per_n == ref.count_per_n);
  }
}

TEST_CASE("volume_delta is strictly decreasing inside (0,1)") {
  Rational prev = volume_delta(2);
  for (int k = 3; k <= 18; ++k) {
    const Rational v = volume_delta(k);
    CAPTURE(k);
    CHECK(v > 0);
    CHECK(v < 1);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("permutation sums match nested integration of the set probability") {
  for (int k = 2; k <= 7; ++k) {
    for (int n = 1; n <= k / 2; ++n) {
      std::set<std::vector<int>> seen;
      for (const auto& t : enumerate_admissible(k, n)) {
        std::vector<int> set = t.entries;
        std::sort(set.begin(), set.end());
        if (!seen.insert(set).second) continue;
        Rational sum(0);
        std::vector<int> perm = set;
        do {
          sum += tuple_term(alpha_exponents({k, perm}));
        } while (std::next_permutation(perm.begin(), perm.end()));
        const double scaled = Rational(sum / Rational(pow2(static_cast<unsigned>(k)))).get_d();
        CAPTURE(k);
        CAPTURE(n);
        CHECK(scaled == doctest::Approx(oracle::set_probability(k, set)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("volume equals cube term plus every set probability") {
  for (int k = 1; k <= 7; ++k) {
    double total = std::ldexp(1.0, -k);
    for (int n = 1; n <= k / 2; ++n) {
      std::set<std::vector<int>> seen;
      for (const auto& t : enumerate_admissible(k, n)) {
        std::vector<int> set = t.entries;
        std::sort(set.begin(), set.end());
        if (seen.insert(set).second) total += oracle::set_probability(k, set);
      }
    }
    CAPTURE(k);
    CHECK(volume_delta(k).get_d() == doctest::Approx(total).epsilon(1e-12));
  }
}

TEST_CASE("closed forms for S(k) and zeta(2k)") {
  CHECK(s_k_closed(1) == PiMultiple{make_rational(1, 4), 1});
  CHECK(s_k_closed(2) == PiMultiple{make_rational(1, 8), 2});
  CHECK(s_k_closed(3) == PiMultiple{make_rational(1, 32), 3});
  CHECK(s_k_closed(4) == PiMultiple{make_rational(1, 96), 4});
  CHECK(zeta_2k_closed(1) == PiMultiple{make_rational(1, 6), 2});
  CHECK(zeta_2k_closed(2) == PiMultiple{make_rational(1, 90), 4});
  CHECK(zeta_2k_closed(3) == PiMultiple{make_rational(1, 945), 6});
  CHECK(zeta_2k_closed(4) == PiMultiple{make_rational(1, 9450), 8});
  CHECK_THROWS_AS(s_k_closed(0), std::invalid_argument);
  CHECK_THROWS_AS(zeta_2k_closed(0), std::invalid_argument);
}

TEST_CASE("the unscaled tuple form is 2^{2k} times zeta(2k)") {
  CHECK(zeta_2k_unscaled_form(1) == PiMultiple{make_rational(2, 3), 2});
  for (int k = 1; k <= 6; ++k) {
    const Rational ratio = zeta_2k_unscaled_form(k).coeff / zeta_2k_closed(k).coeff;
    CHECK(ratio == Rational(pow2(static_cast<unsigned>(2 * k))));
  }
}

TEST_CASE("volume_delta(16) is fast on one thread") {
  const int saved = max_threads();
  set_threads(1);
  const auto t0 = std::chrono::steady_clock::now();
  const TupleSum s = tuple_sum(16);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  set_threads(saved);
  std::uint64_t total = 0;
  for (auto c : s.count_per_n) total += c;
  CHECK(secs < 10.0);
  CHECK(total > 500'000);
  for (int n = 1; n <= 8; ++n) {
    CHECK(BigInt(static_cast<unsigned long>(s.count_per_n[static_cast<std::size_t>(n)])) ==
          ordered_cycle_independent_sets(16, n));
  }
}
