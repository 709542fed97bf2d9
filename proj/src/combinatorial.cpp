#include "polyzeta/combinatorial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace polyzeta {

namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
}

// Bitmask kernel limit: indices live in bits 1..k of a 64-bit word, and the
// running denominator prod (i + alpha-prefix) <= 3^n n! stays below 2^128.
constexpr int kMaxKernelK = 50;

using u128 = unsigned __int128;

BigInt to_bigint(u128 v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

struct KernelState {
  KernelState() = default;
  KernelState(int k_, int max_n_)
      : k(k_), max_n(max_n_), base_alpha(k_ == 2 ? 1 : 2),
        count_per_n(static_cast<std::size_t>(max_n_) + 1, 0) {}

  int k = 0;
  int max_n = 0;
  int base_alpha = 2;
  std::uint64_t selected = 0;
  std::uint64_t blocked = 0;
  std::map<u128, std::uint64_t> by_denominator;
  std::vector<std::uint64_t> count_per_n;

  std::uint64_t bit(int v) const { return (v >= 1 && v <= k) ? (std::uint64_t{1} << v) : 0; }

  int shared_neighbours(int v) const {
    int c = 0;
    for (int off : {2, k - 2}) {
      if (off <= 0) continue;
      if (selected & bit(v - off)) ++c;
      if (selected & bit(v + off)) ++c;
    }
    return c;
  }

  void place(int v, int depth, int alpha_prefix, u128 denom) {
    const int alpha = base_alpha - shared_neighbours(v);
    const int prefix = alpha_prefix + alpha;
    const u128 d = denom * static_cast<u128>(depth + 1 + prefix);
    ++by_denominator[d];
    ++count_per_n[depth + 1];
    if (depth + 1 == max_n) return;

    const std::uint64_t saved_sel = selected;
    const std::uint64_t saved_blk = blocked;
    selected |= bit(v);
    blocked |= bit(v) | bit(v == 1 ? k : v - 1) | bit(v == k ? 1 : v + 1);
    for (int w = 1; w <= k; ++w) {
      if (!(blocked & bit(w))) place(w, depth + 1, prefix, d);
    }
    selected = saved_sel;
    blocked = saved_blk;
  }
};

}  // namespace

bool cyclically_adjacent(int k, int a, int b) {
  const int d = std::abs(a - b);
  return d == 1 || d == k - 1;
}

bool is_admissible(int k, std::span<const int> entries) {
  if (k < 1) return false;
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (entries[p] < 1 || entries[p] > k) return false;
    for (std::size_t q = p + 1; q < entries.size(); ++q) {
      if (entries[p] == entries[q] || cyclically_adjacent(k, entries[p], entries[q])) return false;
    }
  }
  return true;
}

AdmissibleStream::AdmissibleStream(int k, int n) : k_(k), n_(static_cast<std::size_t>(n)) {
  require_k(k);
  if (n < 1) throw std::invalid_argument("tuple size must be >= 1");
  vals_.assign(n_, 0);
  done_ = n > k / 2;
}

bool AdmissibleStream::fits(int value, std::size_t depth) const {
  for (std::size_t m = 0; m < depth; ++m) {
    if (vals_[m] == value || cyclically_adjacent(k_, vals_[m], value)) return false;
  }
  return true;
}

std::optional<AdmissibleTuple> AdmissibleStream::next() {
  while (!done_) {
    if (depth_ < 0) {
      done_ = true;
      break;
    }
    const auto d = static_cast<std::size_t>(depth_);
    int v = vals_[d] + 1;
    while (v <= k_ && !fits(v, d)) ++v;
    if (v > k_) {
      vals_[d] = 0;
      --depth_;
      continue;
    }
    vals_[d] = v;
    if (d + 1 == n_) return AdmissibleTuple{k_, vals_};
    ++depth_;
  }
  return std::nullopt;
}

std::vector<AdmissibleTuple> enumerate_admissible(int k, int n) {
  std::vector<AdmissibleTuple> out;
  AdmissibleStream s(k, n);
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

AlphaVector alpha_exponents(const AdmissibleTuple& t) {
  const int k = t.k;
  const auto& r = t.entries;
  AlphaVector a;
  a.alphas.reserve(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    int alpha = 2 - (k == 2 ? 1 : 0);
    for (std::size_t m = 0; m < j; ++m) {
      const int d = std::abs(r[m] - r[j]);
      alpha -= (d == 2 ? 1 : 0) + (d == k - 2 ? 1 : 0);
    }
    a.alphas.push_back(alpha);
  }
  return a;
}

Rational tuple_term(const AlphaVector& a) {
  BigInt denom(1);
  long prefix = 0;
  for (std::size_t i = 0; i < a.alphas.size(); ++i) {
    prefix += a.alphas[i];
    denom *= static_cast<long>(i + 1) + prefix;
  }
  return make_rational(BigInt(1), denom);
}

TupleSum tuple_sum(int k) {
  require_k(k);
  if (k > kMaxKernelK) {
    throw std::invalid_argument("tuple_sum kernel supports k <= " + std::to_string(kMaxKernelK));
  }
  const int max_n = k / 2;
  TupleSum out{Rational(0), std::vector<std::uint64_t>(static_cast<std::size_t>(max_n) + 1, 0)};
  if (max_n == 0) return out;

  std::vector<KernelState> per_first(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= k; ++first) {
    KernelState st(k, max_n);
    st.place(first, 0, 0, 1);
    per_first[static_cast<std::size_t>(first - 1)] = std::move(st);
  }

  std::map<u128, std::uint64_t> merged;
  for (const auto& st : per_first) {
    for (const auto& [d, c] : st.by_denominator) merged[d] += c;
    for (std::size_t n = 0; n < st.count_per_n.size(); ++n) out.count_per_n[n] += st.count_per_n[n];
  }
  for (const auto& [d, c] : merged) {
    out.sum += make_rational(BigInt(static_cast<unsigned long>(c)), to_bigint(d));
  }
  return out;
}

Rational volume_delta(int k) {
  require_k(k);
  return (Rational(1) + tuple_sum(k).sum) / Rational(pow2(static_cast<unsigned>(k)));
}

PiMultiple s_k_closed(int k) {
  require_k(k);
  return PiMultiple{volume_delta(k) / Rational(pow2(static_cast<unsigned>(k))),
                    static_cast<unsigned>(k)};
}

PiMultiple zeta_2k_closed(int k) {
  require_k(k);
  const BigInt p = pow2(static_cast<unsigned>(2 * k));
  return make_rational(p, p - 1) * s_k_closed(2 * k);
}

PiMultiple zeta_2k_unscaled_form(int k) {
  require_k(k);
  const BigInt p = pow2(static_cast<unsigned>(2 * k));
  const Rational bracket = Rational(1) + tuple_sum(2 * k).sum;
  return PiMultiple{bracket / Rational(p - 1), static_cast<unsigned>(2 * k)};
}

BigInt ordered_cycle_independent_sets(int k, int n) {
  if (n < 1 || 2 * n > k) return BigInt(0);
  const auto uk = static_cast<unsigned>(k);
  const auto un = static_cast<unsigned>(n);
  return factorial(un) * BigInt(k) * binomial(uk - un, un) / BigInt(k - n);
}

namespace reference {

TupleSum tuple_sum(int k) {
  require_k(k);
  const int max_n = k / 2;
  TupleSum out{Rational(0), std::vector<std::uint64_t>(static_cast<std::size_t>(max_n) + 1, 0)};
  for (int n = 1; n <= max_n; ++n) {
    AdmissibleStream s(k, n);
    while (auto t = s.next()) {
      out.sum += tuple_term(alpha_exponents(*t));
      ++out.count_per_n[static_cast<std::size_t>(n)];
    }
  }
  return out;
}

Rational volume_delta(int k) {
  return (Rational(1) + tuple_sum(k).sum) / Rational(pow2(static_cast<unsigned>(k)));
}

}  // namespace reference

}  // namespace polyzeta
