#include <benchmark/benchmark.h>

#include "tilecert/classify.hpp"
#include "tilecert/interp.hpp"
#include "tilecert/stability.hpp"
#include "tilecert/tiler.hpp"

using namespace tilecert;

static void BM_SpecialtyTest(benchmark::State& state) {
  SystemSpec spec{Diagram::rect((int)state.range(0), (int)state.range(0)),
                  {3, 3, 3, 2, 2}};
  uint64_t seed = 1;
  for (auto _ : state) {
    SpecialtyVerdict v = specialty_test(spec, seed++, 2);
    benchmark::DoNotOptimize(v.rank);
  }
}
BENCHMARK(BM_SpecialtyTest)->Arg(5)->Arg(6)->Arg(7);

static void BM_RankDense(benchmark::State& state) {
  const int n = (int)state.range(0);
  uint64_t s = 42;
  MatrixModP m(n, n, kDefaultPrime);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at(r, c) = (uint32_t)(splitmix64(s) % kDefaultPrime);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankDense)->Arg(36)->Arg(100);

static void BM_EnumerateStable6(benchmark::State& state) {
  for (auto _ : state) {
    TileCatalog c = enumerate_stable(6, 6, 6);
    benchmark::DoNotOptimize(c.members.size());
  }
}
BENCHMARK(BM_EnumerateStable6)->Unit(benchmark::kMillisecond);

static void BM_TilerExact(benchmark::State& state) {
  TilingProblem prob;
  prob.target = Diagram::rect(6, 6);
  prob.mults = {3, 3, 3, 3, 3, 3};
  for (auto _ : state) {
    SearchResult res = find_certified_tiling(prob, 1);
    benchmark::DoNotOptimize(res.explored);
  }
}
BENCHMARK(BM_TilerExact)->Unit(benchmark::kMillisecond);

static void BM_TilerNegative(benchmark::State& state) {
  TilingProblem prob;
  prob.target = Diagram::rect(5, 6);
  prob.mults = {3, 3, 3, 3, 3};
  for (auto _ : state) {
    SearchResult res = find_certified_tiling(prob, 1);
    benchmark::DoNotOptimize(res.exhausted);
  }
}
BENCHMARK(BM_TilerNegative)->Unit(benchmark::kMillisecond);

static void BM_ClassifySweep(benchmark::State& state) {
  for (auto _ : state) {
    SweepReport rep = verify_range((int)state.range(0), 6, 7, 2);
    benchmark::DoNotOptimize(rep.cases_checked);
  }
}
BENCHMARK(BM_ClassifySweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
