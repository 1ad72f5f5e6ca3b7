#include <benchmark/benchmark.h>

#include "covol/bounds.hpp"
#include "covol/finite_groups.hpp"
#include "covol/transcendental.hpp"

using namespace covol;

static void BM_EnclosePi(benchmark::State& state) {
  Precision p{state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(enclose_pi(p));
}
BENCHMARK(BM_EnclosePi)->Arg(128)->Arg(512)->Arg(2048);

static void BM_ZetaEnclosure(benchmark::State& state) {
  Precision p{state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_enclosure(2, p));
}
BENCHMARK(BM_ZetaEnclosure)->Arg(128)->Arg(512)->Arg(2048);

static void BM_ZetaProductAll(benchmark::State& state) {
  Precision p{state.range(0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(zeta_product_bound(kInfiniteProduct, p));
}
BENCHMARK(BM_ZetaProductAll)->Arg(128)->Arg(512);

static void BM_FnM(benchmark::State& state) {
  Precision p{512};
  for (auto _ : state)
    benchmark::DoNotOptimize(fn_M(state.range(0), state.range(1), p));
}
BENCHMARK(BM_FnM)->Args({2, 9})->Args({8, 11})->Args({8, 20});

static void BM_FnMprime(benchmark::State& state) {
  Precision p{512};
  for (auto _ : state)
    benchmark::DoNotOptimize(fn_Mprime(state.range(0), state.range(1), p));
}
BENCHMARK(BM_FnMprime)->Args({6, 4})->Args({16, 3})->Args({8, 20});

static void BM_ParabolicIndex(benchmark::State& state) {
  Composition c({1, 1, 1, 1, 1, 1, 1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(parabolic_index(c, state.range(0)));
}
BENCHMARK(BM_ParabolicIndex)->Arg(2)->Arg(9);

static void BM_BruteForceFlags(benchmark::State& state) {
  Composition c({1, 1, 1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_flag_count(c, state.range(0)));
}
BENCHMARK(BM_BruteForceFlags)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
