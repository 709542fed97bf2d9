#pragma once

#include "polyzeta/exact.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polyzeta {

/// Ordered tuple of distinct, cyclically nonconsecutive indices in [1, k].
struct AdmissibleTuple {
  int k = 0;
  std::vector<int> entries;

  bool operator==(const AdmissibleTuple&) const = default;
};

struct AlphaVector {
  std::vector<int> alphas;

  bool operator==(const AlphaVector&) const = default;
};

/// True iff |a - b| is 1 or k - 1, i.e. a and b are neighbours on the k-cycle.
bool cyclically_adjacent(int k, int a, int b);

bool is_admissible(int k, std::span<const int> entries);

/// Lexicographic stream of the admissible n-tuples in [k]^n.
class AdmissibleStream {
 public:
  AdmissibleStream(int k, int n);

  std::optional<AdmissibleTuple> next();

 private:
  bool fits(int value, std::size_t depth) const;

  int k_;
  std::size_t n_;
  std::vector<int> vals_;
  std::ptrdiff_t depth_ = 0;
  bool done_ = false;
};

std::vector<AdmissibleTuple> enumerate_admissible(int k, int n);

/// alpha_j = 2 - [k == 2] - sum_{m<j} ([d == 2] + [d == k-2]), d = |r_m - r_j|.
AlphaVector alpha_exponents(const AdmissibleTuple& t);

/// prod_i 1 / (i + alpha_1 + ... + alpha_i)
Rational tuple_term(const AlphaVector& a);

struct TupleSum {
  Rational sum;                         // sum of tuple_term over all sizes n >= 1
  std::vector<std::uint64_t> count_per_n;  // index n, entry 0 unused
};

/// OpenMP kernel: sums tuple terms over all admissible tuples of every size.
TupleSum tuple_sum(int k);

/// Vol of {u in (0,1)^k : u_i + u_{i+1} < 1 cyclically} = 2^-k (1 + tuple sum).
Rational volume_delta(int k);

/// S(k) = (pi/2)^k Vol = (pi/4)^k (1 + tuple sum).
PiMultiple s_k_closed(int k);

/// zeta(2k) = 2^{2k} / (2^{2k} - 1) * S(2k).
PiMultiple zeta_2k_closed(int k);

/// pi^{2k} / (2^{2k} - 1) * (1 + tuple sum over [2k]). Kept only so the
/// verification report can show that this form is 2^{2k} times zeta(2k).
PiMultiple zeta_2k_unscaled_form(int k);

/// n! * k/(k-n) * C(k-n, n): ordered independent n-sets of the cycle C_k.
BigInt ordered_cycle_independent_sets(int k, int n);

namespace reference {

/// Serial route through AdmissibleStream, alpha_exponents and tuple_term.
TupleSum tuple_sum(int k);
Rational volume_delta(int k);

}  // namespace reference

}  // namespace polyzeta
