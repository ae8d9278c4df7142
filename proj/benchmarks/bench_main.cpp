#include <benchmark/benchmark.h>

#include "chg/constructions.hpp"
#include "chg/search.hpp"
#include "chg/verify.hpp"

namespace {

void BM_VerifySphere(benchmark::State& state) {
  const auto p = state.range(0);
  const auto threads = static_cast<unsigned>(state.range(1));
  auto s = chg::sphere_set(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chg::verify_chg(s.group(), s, 3, 3, {100'000'000, threads}).holds);
  }
  state.counters["subsets"] = static_cast<double>(chg::binomial(s.size(), 3));
}
BENCHMARK(BM_VerifySphere)->Args({11, 1})->Args({13, 1})->Args({13, 4})->Unit(benchmark::kMillisecond);

void BM_SphereSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chg::sphere_set(state.range(0)).size());
}
BENCHMARK(BM_SphereSet)->Arg(13)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_MaxTable(benchmark::State& state) {
  const int h = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chg::max_table(state.range(0), h, h).size());
  }
}
BENCHMARK(BM_MaxTable)->Args({25, 2})->Args({18, 3})->Unit(benchmark::kMillisecond);

void BM_WeakRandom(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chg::weak_random_set(state.range(0), 2, 2, seed++).set.size());
  }
}
BENCHMARK(BM_WeakRandom)->Arg(100'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_ZMatrix(benchmark::State& state) {
  auto ns = chg::norm_set(state.range(0), 2);
  for (auto _ : state) {
    auto m = chg::build_zmatrix(ns.set.group(), ns.set);
    benchmark::DoNotOptimize(chg::check_kgh_free(m, ns.g, 2).holds);
  }
}
BENCHMARK(BM_ZMatrix)->Arg(7)->Arg(19)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
