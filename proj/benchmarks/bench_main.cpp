#include <benchmark/benchmark.h>

#include <complex>

#include "jqb/jqb.hpp"

namespace {

using namespace jqb;

void BM_SeriesH(benchmark::State& state) {
  const QDomain qd(static_cast<double>(state.range(0)) / 100.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(series_h(Family::Second, qd));
}
BENCHMARK(BM_SeriesH)->Arg(10)->Arg(50)->Arg(90);

void BM_EvalJackson(benchmark::State& state) {
  const QDomain qd(0.5, 1.0);
  const std::complex<double> z(0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(eval_jackson(Family::Third, qd, z));
}
BENCHMARK(BM_EvalJackson);

void BM_KappaDirect(benchmark::State& state) {
  const auto h = series_h(Family::Second, QDomain(0.3, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_direct(h, 0.4, Property::Convex));
}
BENCHMARK(BM_KappaDirect);

void BM_MinReFunctional(benchmark::State& state) {
  const auto h = series_h(Family::Second, QDomain(0.3, 0.7));
  const DiskGrid grid{0.999, static_cast<int>(state.range(0)), 16};
  for (auto _ : state) benchmark::DoNotOptimize(min_re_functional(h, Functional::ConvexQuotient, grid));
}
BENCHMARK(BM_MinReFunctional)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
