#include <benchmark/benchmark.h>

#include "extremal/bounds.hpp"
#include "extremal/constructions.hpp"
#include "extremal/enumeration.hpp"
#include "extremal/isomorphism.hpp"
#include "extremal/operations.hpp"
#include "extremal/sampling.hpp"

using namespace extremal;

static void BM_EnumerateMaximal73(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t n = 0;
    enumerate_maximal_intersecting({7, 3}, {}, {}, [&](const Family&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateMaximal73)->Unit(benchmark::kMillisecond);

static void BM_EnumerateLarge94(benchmark::State& state) {
  EnumOptions o;
  o.min_size = 51;
  for (auto _ : state) {
    const EnumOutcome out = enumerate_maximal_intersecting({9, 4}, EnumBudget{0, 0, 1000000, 0}, o,
                                                           [](const Family&) { return true; });
    benchmark::DoNotOptimize(out.nodes);
  }
}
BENCHMARK(BM_EnumerateLarge94)->Unit(benchmark::kMillisecond);

static void BM_IsomorphismJ2E2(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Params p{2 * k + 1, k};
  const Family a = j_i(p, 2);
  const Family b = apply_permutation(random_permutation(p.n, 9), e_l(p, 2));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismJ2E2)->Arg(4)->Arg(5)->Arg(6);

static void BM_Shadow(benchmark::State& state) {
  const Family f = h_u({12, 5}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(shadow(f).size());
}
BENCHMARK(BM_Shadow);

static void BM_Diversity(benchmark::State& state) {
  const Family f = j_i({14, 6}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(diversity(f).value);
}
BENCHMARK(BM_Diversity);

static void BM_BinomExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binom_exact(200, 100));
}
BENCHMARK(BM_BinomExact);

static void BM_KruskalKatonaThreshold(benchmark::State& state) {
  const ExactCount size = binom_exact(40, 6) + 12345;
  for (auto _ : state) benchmark::DoNotOptimize(kk_threshold_x(size, 6).value);
}
BENCHMARK(BM_KruskalKatonaThreshold);

static void BM_RandomIntersecting(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_intersecting({9, 4}, 3, ++seed));
}
BENCHMARK(BM_RandomIntersecting);

BENCHMARK_MAIN();
