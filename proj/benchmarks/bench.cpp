#include "toricsing/chain.hpp"
#include "toricsing/enumerators.hpp"

#include <benchmark/benchmark.h>

using namespace toricsing;

static void BM_normalize(benchmark::State& st) {
  long r = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(normalize(CyclicQuotientType(r, 1, r / 2 + 1, r - 1)));
}
BENCHMARK(BM_normalize)->Arg(9)->Arg(60)->Arg(240);

static void BM_reid_tai(benchmark::State& st) {
  long r = st.range(0);
  CyclicQuotientType t(r, 1, 3, r - 4);
  for (auto _ : st) benchmark::DoNotOptimize(reid_tai_canonical(t));
}
BENCHMARK(BM_reid_tai)->Arg(61)->Arg(241);

static void BM_charts_smooth(benchmark::State& st) {
  auto b = make_blowup(BaseSingularity::smooth(), {15, 10, 6});
  for (auto _ : st) benchmark::DoNotOptimize(charts(b));
}
BENCHMARK(BM_charts_smooth);

static void BM_enumerate_smooth(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_canonical_smooth(st.range(0), static_cast<int>(st.range(1))));
}
BENCHMARK(BM_enumerate_smooth)->Args({15, 1})->Args({30, 1})->Args({30, 4})->Unit(benchmark::kMillisecond);

static void BM_enumerate_odp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_canonical_odp(st.range(0)));
}
BENCHMARK(BM_enumerate_odp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_chain_step(benchmark::State& st) {
  auto s = start_chain(make_blowup(BaseSingularity::smooth(), {1, 1, 1}), plt_case_record(1, {1}));
  for (auto _ : st) benchmark::DoNotOptimize(step(s, 1, 1, 1));
}
BENCHMARK(BM_chain_step);

BENCHMARK_MAIN();
