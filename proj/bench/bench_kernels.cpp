// Serial reference kernels against their OpenMP counterparts. Thread count
// follows COSLAB_THREADS / OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "coslab/parallel.hpp"
#include "coslab/quadrature.hpp"
#include "coslab/s2_harmonics.hpp"
#include "coslab/s2_kernels.hpp"
#include "coslab/s2_verify.hpp"

using namespace coslab;

namespace {

struct Fixture {
  S2Grid grid;
  HarmonicCoeffs coeffs;
  GridFunction f;
  explicit Fixture(int L)
      : grid(S2Grid::make(2 * L, 4 * L)), coeffs(random_coeffs(L, 7, false)), f(synthesize(coeffs, grid)) {}
};

template <bool Parallel>
void BM_analyze(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Fixture fx(L);
  for (auto _ : state) {
    auto c = Parallel ? analyze(fx.f, L) : analyze_reference(fx.f, L);
    benchmark::DoNotOptimize(c.c.data());
  }
  state.counters["threads"] = Parallel ? thread_count() : 1;
}

template <bool Parallel>
void BM_synthesize(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Fixture fx(L);
  for (auto _ : state) {
    auto g = Parallel ? synthesize(fx.coeffs, fx.grid) : synthesize_reference(fx.coeffs, fx.grid);
    benchmark::DoNotOptimize(g.values.data());
  }
  state.counters["threads"] = Parallel ? thread_count() : 1;
}

template <bool Parallel>
void BM_zonal_kernel(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Fixture fx(L);
  const HarmonicEvaluator eval(fx.coeffs);
  const ZonalKernelRule rule{abs_power_rule(3, 1.5, L / 4 + 2), L + 2, 1.0};
  for (auto _ : state) {
    auto g = Parallel ? integrate_zonal_kernel(eval, fx.grid, rule)
                      : integrate_zonal_kernel_reference(eval, fx.grid, rule);
    benchmark::DoNotOptimize(g.values.data());
  }
  state.counters["threads"] = Parallel ? thread_count() : 1;
}

}  // namespace

BENCHMARK(BM_analyze<false>)->Name("analyze/serial")->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_analyze<true>)->Name("analyze/openmp")->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_synthesize<false>)->Name("synthesize/serial")->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_synthesize<true>)->Name("synthesize/openmp")->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zonal_kernel<false>)->Name("zonal_kernel/serial")->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zonal_kernel<true>)->Name("zonal_kernel/openmp")->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
