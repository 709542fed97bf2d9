// OpenMP kernels against their serial references.

#include "polyzeta/combinatorial.hpp"
#include "polyzeta/stochastic.hpp"
#include "polyzeta/sum.hpp"

#include <benchmark/benchmark.h>

using namespace polyzeta;

namespace {

void BM_TupleSumParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(tuple_sum(static_cast<int>(st.range(0))));
}

void BM_TupleSumSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::tuple_sum(static_cast<int>(st.range(0))));
}

void BM_PolytopeMcParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mc_delta_volume(6, st.range(0), 42));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_PolytopeMcSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::mc_delta_volume(6, st.range(0), 42));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_HypertopeMcParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mc_hypertope_prob(6, st.range(0), 42));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_HypertopeMcSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::mc_hypertope_prob(6, st.range(0), 42));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

long double odd_square(std::int64_t n) {
  const long double d = 2.0L * static_cast<long double>(n) + 1;
  return 1.0L / (d * d);
}

void BM_ChunkedSum(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(chunked_sum(0, st.range(0), odd_square));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SerialSum(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::serial_sum(0, st.range(0), odd_square));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_TupleSumParallel)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TupleSumSerial)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolytopeMcParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolytopeMcSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypertopeMcParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypertopeMcSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChunkedSum)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerialSum)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
