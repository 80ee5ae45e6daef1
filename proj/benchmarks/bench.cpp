#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "vdwshock/vdwshock.hpp"

using namespace vdw;

static void BM_Criterion(benchmark::State& state) {
  const GasModel gas{1.4, 0.1};
  double beta = 1.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(criterion(beta, gas));
    beta = beta < 2.0 ? beta + 1e-3 : 1.2;
  }
}
BENCHMARK(BM_Criterion);

static void BM_RegularReflection(benchmark::State& state) {
  const GasModel gas{1.4, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_regular_reflection({1.2, 1.0}, std::numbers::pi / 4, gas));
  }
}
BENCHMARK(BM_RegularReflection);

static void BM_TableGenerate(benchmark::State& state) {
  const double gamma = 1.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table_generate(default_beta_grid(), default_btilde_grid(), gamma));
  }
}
BENCHMARK(BM_TableGenerate);

static void BM_DiffractionDensity(benchmark::State& state) {
  const double alpha = std::numbers::pi / 4;
  const double mu = diffraction_mu(alpha);
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kb_density_raw(s, 0.3, mu));
    s = s < 0.9 ? s + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_DiffractionDensity);

static void BM_InnerWeakSolution(benchmark::State& state) {
  const InnerGeometry geom = inner_geometry({1.4, 0.2});
  const InnerPoint ip = make_inner_point(-1.0, 0.7, geom.kappa0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner_weak_solution(ip, geom, InnerWaveKind::Reflected));
  }
}
BENCHMARK(BM_InnerWeakSolution);
BENCHMARK_MAIN();
