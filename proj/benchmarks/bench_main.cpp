#include <benchmark/benchmark.h>

#include "smw/bruhat.hpp"
#include "smw/stumbo.hpp"
#include "smw/weyl.hpp"

using namespace smw;

static void BM_EnumerateGroup(benchmark::State& state) {
  auto d = build_datum("B" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(d));
}
BENCHMARK(BM_EnumerateGroup)->Arg(4)->Arg(5)->Arg(6);

static void BM_QuotientRepresentatives(benchmark::State& state) {
  auto d = build_datum("E6");
  for (auto _ : state)
    benchmark::DoNotOptimize(quotient_representatives({&d, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_QuotientRepresentatives)->Arg(1)->Arg(3);

static void BM_BruhatLeqSweep(benchmark::State& state) {
  auto d = build_datum("A" + std::to_string(state.range(0)));
  auto all = enumerate_group(d);
  for (auto _ : state) {
    BruhatOrder order(d);
    long long yes = 0;
    for (const auto& u : all)
      for (const auto& w : all)
        if (order.leq(u, w)) ++yes;
    benchmark::DoNotOptimize(yes);
  }
}
BENCHMARK(BM_BruhatLeqSweep)->Arg(3)->Arg(4);

static void BM_StumboEnumeration(benchmark::State& state) {
  auto d = build_datum("D" + std::to_string(state.range(0)));
  for (auto _ : state)
    for (int i = 1; i <= d.n; ++i)
      benchmark::DoNotOptimize(enumerate_quotient_stumbo(d, i));
}
BENCHMARK(BM_StumboEnumeration)->Arg(5)->Arg(6);

static void BM_CountSmi(benchmark::State& state) {
  auto d = build_datum("C7");
  for (auto _ : state)
    for (int i : d.K) benchmark::DoNotOptimize(count_smi(d, i));
}
BENCHMARK(BM_CountSmi);

BENCHMARK_MAIN();
