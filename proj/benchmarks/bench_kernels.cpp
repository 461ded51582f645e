#include <benchmark/benchmark.h>

#include "polyharm/gegenbauer.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/polytext.hpp"
#include "polyharm/solver.hpp"

using namespace polyharm;

namespace {

void BM_Gegenbauer(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gegenbauer(1.5, m, t));
    t = t > 0.9 ? -0.9 : t + 1e-3;
  }
}
BENCHMARK(BM_Gegenbauer)->Arg(8)->Arg(30)->Arg(200);

void BM_ZonalRoute(benchmark::State& state) {
  const auto route = kAllRoutes[state.range(0)];
  const RotatedVector x = RotatedVector::sector_point(1, 3, {0.2, -0.3, 0.4});
  const RotatedVector zeta = RotatedVector::sector_point(2, 3, {0.0, 0.6, 0.8});
  for (auto _ : state) benchmark::DoNotOptimize(zonal_polyharmonic({3, 3, 8}, x, zeta, route));
  state.SetLabel(route_name(route));
}
BENCHMARK(BM_ZonalRoute)->DenseRange(0, 2);

void BM_PoissonClosedForm(benchmark::State& state) {
  const RotatedVector x = RotatedVector::sector_point(1, 2, {0.2, -0.3, 0.4});
  const RotatedVector zeta = RotatedVector::sector_point(0, 2, {0.0, 0.6, 0.8});
  for (auto _ : state) benchmark::DoNotOptimize(poisson_kernel(3, 2, x, zeta));
}
BENCHMARK(BM_PoissonClosedForm);

void BM_PoissonSeries(benchmark::State& state) {
  const double r = state.range(0) / 10.0;
  const RotatedVector x = RotatedVector::sector_point(1, 2, {r, 0.0, 0.0});
  const RotatedVector zeta = RotatedVector::sector_point(0, 2, {0.0, 0.6, 0.8});
  int terms = 0;
  for (auto _ : state) {
    const KernelValue v = poisson_kernel_series(3, 2, x, zeta, 1e-12);
    terms = v.terms_used;
    benchmark::DoNotOptimize(v.value);
  }
  state.counters["terms"] = terms;
}
BENCHMARK(BM_PoissonSeries)->Arg(3)->Arg(6)->Arg(8);

void BM_DirichletSolve(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto f = BoundaryData::from_polynomial(parse_numeric_poly("x1^3 - 3*x1*x2^2 + x3^2", 3), p);
  std::vector<RotatedVector> points;
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < 10; ++k) points.push_back(RotatedVector::sector_point(j, p, {0.05 * k, -0.03 * k, 0.2}));
  }
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_solve(f, points).values);
}
BENCHMARK(BM_DirichletSolve)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SphereRule(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_rule_for_degree(3, degree).size());
}
BENCHMARK(BM_SphereRule)->Arg(20)->Arg(80)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
