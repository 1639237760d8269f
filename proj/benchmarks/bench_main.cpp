#include <benchmark/benchmark.h>

#include <cmath>

#include "pntlab/explicit_formula.hpp"
#include "pntlab/omega.hpp"
#include "pntlab/sieve.hpp"
#include "pntlab/zeros.hpp"

using namespace pntlab;

namespace {

const ZeroSet& table() {
  static const ZeroSet zs = load_ordinates(std::string(PNTLAB_DATA_DIR) + "/zeros_100k.txt");
  return zs;
}

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  SieveOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto t = build_tables(limit, {limit}, opts);
    benchmark::DoNotOptimize(t.at(limit).psi);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Args({1'000'000, 1})->Args({100'000'000, 1})->Args({100'000'000, 4})
    ->Unit(benchmark::kMillisecond);

void BM_MinimizeClassical(benchmark::State& state) {
  const auto region = ZeroFreeRegion::classical(5.573412);
  const double L = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_f(region, L).omega);
}
BENCHMARK(BM_MinimizeClassical)->Arg(100)->Arg(1'000'000);

void BM_MinimizeVK(benchmark::State& state) {
  const auto region = ZeroFreeRegion::vinogradov_korobov(53.989);
  const double L = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_f(region, L).omega);
}
BENCHMARK(BM_MinimizeVK)->Arg(1000)->Arg(100'000'000);

void BM_TruncatedPsi(benchmark::State& state) {
  const auto& zs = table();
  ZeroSumOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_psi(1000.5, zs, 74000.0, opts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(zs.size()));
}
BENCHMARK(BM_TruncatedPsi)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_LoadZeroTable(benchmark::State& state) {
  for (auto _ : state) {
    auto zs = load_ordinates(std::string(PNTLAB_DATA_DIR) + "/zeros_100k.txt");
    benchmark::DoNotOptimize(zs.size());
  }
}
BENCHMARK(BM_LoadZeroTable)->Unit(benchmark::kMillisecond);

void BM_Li(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(li(1e10));
}
BENCHMARK(BM_Li);

}  // namespace

BENCHMARK_MAIN();
