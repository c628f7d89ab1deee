// Microbenchmarks for the dominant cost centers: exact series arithmetic,
// coefficient extraction, rational normal forms, zeta summation and the
// quadrature engines.

#include <benchmark/benchmark.h>

#include "polyzeta/cache.hpp"
#include "polyzeta/index.hpp"
#include "polyzeta/neglog.hpp"
#include "polyzeta/polybern.hpp"
#include "polyzeta/quad.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;

static void BM_SeriesBernoulliDivision(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Series q = series_div(series_t(n + 1), series_exp_minus_one(n + 1), n);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_SeriesBernoulliDivision)->Arg(24)->Arg(48);

static void BM_PolyBernoulli(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    Rational v = poly_bernoulli(BernKind::B, Index{-4}, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PolyBernoulli)->Arg(10)->Arg(20);

static void BM_MultiIndexedExtraction(benchmark::State& state) {
  for (auto _ : state) {
    Rational v = multi_indexed(Index{-2, -1}, {2, 2}, 2);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_MultiIndexedExtraction);

static void BM_PerSlotNumerator(benchmark::State& state) {
  for (auto _ : state) {
    IntPoly p = p_tilde(Index{2, 1, 2});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PerSlotNumerator);

static void BM_MzvColdCache(benchmark::State& state) {
  for (auto _ : state) {
    MzvCache::instance().clear();
    NumValue v = mzv(Index{1, 3}, 1e-10);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_MzvColdCache);

static void BM_LiContinuation(benchmark::State& state) {
  for (auto _ : state) {
    NumValue v = li_continued(Index{1, 2}, 3.0, ChartSide::Xi, 1e-12);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LiContinuation);

static void BM_EtaQuadClosedIntegrand(benchmark::State& state) {
  for (auto _ : state) {
    QuadResult q = eta_quad(Index{-3}, 2.5, 1e-9);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_EtaQuadClosedIntegrand);

BENCHMARK_MAIN();
