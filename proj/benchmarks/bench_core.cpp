#include <benchmark/benchmark.h>

#include "rbfcub/cubature.hpp"

using namespace rbfcub;

namespace {

PointSet grid_for(int n) {
  return equidistant(Rectangle::interval(0.0, 1.0), n);
}

void BM_assemble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ps = grid_for(n);
  const std::vector<double> shapes(ps.size(), 4.0);
  const PolyBasis basis = MonomialBasis::create(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(Kernel::gaussian(), shapes, ps, &basis));
  }
}
BENCHMARK(BM_assemble)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_weights_solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ps = grid_for(n);
  const std::vector<double> shapes(ps.size(), 4.0);
  const PolyBasis basis = MonomialBasis::create(1, 1);
  const MomentVector mv = compute_moments(Kernel::gaussian(), shapes, ps, &basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_weights(Kernel::gaussian(), shapes, ps, &basis, mv));
  }
}
BENCHMARK(BM_weights_solve)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_gaussian_moment_closed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_gaussian_1d(3.0, 0.37, 0.0, 1.0));
  }
}
BENCHMARK(BM_gaussian_moment_closed);

void BM_wendland_moment_quadrature(benchmark::State& state) {
  const Kernel w = Kernel::wendland(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        moment_quadrature(w, 4.0, {0.37, 0.0}, Rectangle::interval(0.0, 1.0), 1e-12));
  }
}
BENCHMARK(BM_wendland_moment_quadrature);

void BM_phs2d_moment_closed(benchmark::State& state) {
  const Kernel cubic = Kernel::phs_odd(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_phs_2d(cubic, {0.37, 0.61}, Rectangle::unit(2)));
  }
}
BENCHMARK(BM_phs2d_moment_closed);

void BM_lebesgue_estimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ps = grid_for(n);
  const std::vector<double> shapes(ps.size(), 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lebesgue_estimate(Kernel::gaussian(), shapes, ps, 1));
  }
}
BENCHMARK(BM_lebesgue_estimate)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
