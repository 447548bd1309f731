#include <benchmark/benchmark.h>

#include "kerrqc/correlations.hpp"
#include "kerrqc/fockoracle.hpp"
#include "kerrqc/marching_cubes.hpp"
#include "kerrqc/poincare_export.hpp"
#include "kerrqc/specfun.hpp"

using namespace kerrqc;
using specfun::bessel_i_scaled_orders;
using specfun::theta_kernel;

static void BM_BesselOrders(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  const std::int64_t n = bessel_window(z);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_i_scaled_orders(n, z));
  state.SetItemsProcessed(state.iterations() * (n + 1));
}
BENCHMARK(BM_BesselOrders)->Arg(10)->Arg(1000)->Arg(2'000'000);

static void BM_ThetaKernel(benchmark::State& state) {
  const double width = state.range(0) == 0 ? 1e-3 : 5.0;
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_kernel(phi, width));
    phi += 0.01;
  }
}
BENCHMARK(BM_ThetaKernel)->Arg(0)->Arg(1);

static void BM_PurityQcSeries(benchmark::State& state) {
  const TwoModeCoherentInit init{1e6, 1e6, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(purity_qc_series(init, 2e-6));
}
BENCHMARK(BM_PurityQcSeries);

static void BM_PurityQcIntegral(benchmark::State& state) {
  const TwoModeCoherentInit init{1e6, 1e6, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(purity_qc_integral(init, 2e-6));
}
BENCHMARK(BM_PurityQcIntegral);

static void BM_PurityExact(benchmark::State& state) {
  const TwoModeCoherentInit init{1e6, 1e6, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(purity_exact(init, 2e-6));
}
BENCHMARK(BM_PurityExact);

static void BM_Covariance(benchmark::State& state) {
  const TwoModeCoherentInit init{1e6, 1e6, 0.0, 0.0};
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_spectrum(covariance_matrix(init, 1e-6, {order})));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(order) * order * order * order);
}
BENCHMARK(BM_Covariance)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_FockPurity(benchmark::State& state) {
  const TwoModeCoherentInit init{static_cast<double>(state.range(0)), static_cast<double>(state.range(0)), 0.0, 0.0};
  const fock::FockState psi = fock::coherent_fock(init, fock::minimal_cutoff(init));
  for (auto _ : state) benchmark::DoNotOptimize(fock::reduced_purity(fock::evolve_fock(psi, 0.1), fock::Mode::kA));
}
BENCHMARK(BM_FockPurity)->Arg(4)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_SampleGrid(benchmark::State& state) {
  const auto init = TwoModeCoherentInit::circular(1e4);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_grid(init, 2e-5, KerrConfig{}, default_box(init), {n, n, n}, 1));
  }
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_SampleGrid)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_MarchingCubes(benchmark::State& state) {
  const auto init = TwoModeCoherentInit::circular(1e4);
  const std::int64_t n = state.range(0);
  const ScalarGrid3D g = sample_grid(init, 2e-5, KerrConfig{}, default_box(init), {n, n, n}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(extract_isosurface(g, 1e-4));
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_MarchingCubes)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
