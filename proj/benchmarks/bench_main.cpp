#include <benchmark/benchmark.h>

#include <cmath>

#include "cyclecodes/bounds.hpp"
#include "cyclecodes/certificates.hpp"
#include "cyclecodes/fourier.hpp"
#include "cyclecodes/independent_set.hpp"
#include "cyclecodes/krawtchouk.hpp"
#include "cyclecodes/lp_bound.hpp"

using namespace cyclecodes;

static void BM_KrawColumn(benchmark::State& state) {
  const kraw::SchemeParams s{static_cast<int>(state.range(0)), std::sqrt(5.0)};
  for (auto _ : state) benchmark::DoNotOptimize(kraw::kraw_column(s, s.n / 3.0));
}
BENCHMARK(BM_KrawColumn)->Arg(20)->Arg(40)->Arg(200);

static void BM_LpSolve(benchmark::State& state) {
  const kraw::SchemeParams s{static_cast<int>(state.range(0)), std::sqrt(5.0)};
  const int d = s.n * 3 / 5;
  for (auto _ : state) benchmark::DoNotOptimize(lpbound::lp_solve(s, d).value);
}
BENCHMARK(BM_LpSolve)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_AlphaSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(codes::alpha_search(5, 3, codes::ExtDist(2)).size);
}
BENCHMARK(BM_AlphaSearch)->Unit(benchmark::kMillisecond);

static void BM_Dft(benchmark::State& state) {
  const int q = 9, n = 3;
  std::vector<double> f(fourier::table_size(q, n), 0.0);
  f[0] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(fourier::dft(q, n, f).transform.data());
}
BENCHMARK(BM_Dft)->Unit(benchmark::kMicrosecond);

static void BM_SampleCurves(benchmark::State& state) {
  const auto grid = bounds::make_grid();
  for (auto _ : state)
    for (const auto& id : bounds::curve_ids())
      if (bounds::curve_applies(id, 9))
        benchmark::DoNotOptimize(bounds::sample_curve(id, bounds::curve_kind(id), 9, bounds::curve_by_id(id, 9), grid));
}
BENCHMARK(BM_SampleCurves)->Unit(benchmark::kMillisecond);

static void BM_BuildF(benchmark::State& state) {
  const auto cert = lpbound::lp_solve({3, *bounds::cycle_params(5).q_prime}, 2).cert;
  for (auto _ : state) benchmark::DoNotOptimize(certs::build_f(5, 3, cert).transform.data());
}
BENCHMARK(BM_BuildF)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
