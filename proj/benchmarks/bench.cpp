#include <benchmark/benchmark.h>

#include "orbitkit/catalog.hpp"
#include "orbitkit/dsl.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/rng.hpp"

using namespace orbitkit;

static void BM_Rref(benchmark::State& state) {
  Rng rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
  for (auto _ : state) {
    QMatrix c = m;
    benchmark::DoNotOptimize(c.rref());
  }
}
BENCHMARK(BM_Rref)->Arg(6)->Arg(12)->Arg(20);

static void BM_AnalyzePoint(benchmark::State& state) {
  static const char* names[] = {"se3", "galilei", "bargmann"};
  Fixture fix = build_fixture(names[state.range(0)]);
  const CovectorPoint& n = fix.points.at(fix.point_order.front());
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_point(fix.sd, n));
  }
}
BENCHMARK(BM_AnalyzePoint)->Arg(0)->Arg(1)->Arg(2);

static void BM_ParseLie(benchmark::State& state) {
  std::string src = lie_source("bargmann");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsl::load(src));
  }
}
BENCHMARK(BM_ParseLie);

BENCHMARK_MAIN();
