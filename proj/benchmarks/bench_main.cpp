#include "spherepde/derive.hpp"
#include "spherepde/helmholtz.hpp"
#include "spherepde/poisson.hpp"
#include "spherepde/wavelet.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace spherepde;

namespace {

ZonalFunction random_zonal(int n, int L) {
  std::mt19937 g(1);
  std::normal_distribution<double> N;
  std::vector<cplx> c(static_cast<size_t>(L) + 1);
  for (auto& x : c) x = cplx(N(g), N(g));
  c[0] = 0.0;
  return ZonalFunction(DimensionContext(n), c);
}

void BM_gegenbauer_all(benchmark::State& st) {
  const int L = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(gegenbauer_all(L, 1.5, 0.3));
}
BENCHMARK(BM_gegenbauer_all)->Arg(64)->Arg(1024);

void BM_zonal_eval(benchmark::State& st) {
  const auto f = random_zonal(4, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(zonal_eval(f, 0.3));
}
BENCHMARK(BM_zonal_eval)->Arg(64)->Arg(1024);

void BM_kernel(benchmark::State& st) {
  const KernelEvaluator k(DimensionContext(static_cast<int>(st.range(1))), static_cast<KernelMethod>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(k(0.3));
}
BENCHMARK(BM_kernel)
    ->ArgNames({"method", "n"})
    ->Args({static_cast<int>(KernelMethod::Series), 4})
    ->Args({static_cast<int>(KernelMethod::Integral), 4})
    ->Args({static_cast<int>(KernelMethod::Closed), 4})
    ->Args({static_cast<int>(KernelMethod::Closed), 9});

void BM_project_kernel(benchmark::State& st) {
  const KernelEvaluator k(DimensionContext(3), KernelMethod::Closed);
  const int L = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(project_kernel(k, L));
}
BENCHMARK(BM_project_kernel)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_solve_poisson_spectral(benchmark::State& st) {
  const auto f = random_zonal(3, 256);
  for (auto _ : st) benchmark::DoNotOptimize(solve_poisson(f));
}
BENCHMARK(BM_solve_poisson_spectral);

void BM_solve_poisson_s2_grid(benchmark::State& st) {
  const int L = static_cast<int>(st.range(0));
  SphereSignalS2 f(L);
  std::mt19937 g(2);
  std::normal_distribution<double> N;
  for (auto& a : f.data()) a = cplx(N(g), N(g));
  f(0, 0) = 0.0;
  const auto grid = s2_inverse(f, make_grid_geometry(L));
  const KernelEvaluator k(DimensionContext(2), KernelMethod::Closed);
  for (auto _ : st) benchmark::DoNotOptimize(solve_poisson_grid(grid, L, k));
}
BENCHMARK(BM_solve_poisson_s2_grid)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_cwt_icwt(benchmark::State& st) {
  const auto f = random_zonal(2, 20);
  const auto fam = builtin_family("abel-poisson", f.ctx());
  const auto grid = ScaleGrid::log_spaced(1e-4, 20.0, 200);
  for (auto _ : st) benchmark::DoNotOptimize(icwt(cwt(f, fam, grid), fam));
}
BENCHMARK(BM_cwt_icwt)->Unit(benchmark::kMicrosecond);

void BM_helmholtz_wavelet(benchmark::State& st) {
  const auto f = random_zonal(2, 12);
  const auto p = HelmholtzProblem::non_resonant(f.ctx(), 5.5);
  HelmholtzWaveletOptions opts;
  opts.iterations = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(solve_helmholtz_wavelet(p, f, opts));
}
BENCHMARK(BM_helmholtz_wavelet)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_derive(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(derive_kernel_K_even(n));
}
BENCHMARK(BM_derive)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
