#include <benchmark/benchmark.h>

#include "polyrep/engine.hpp"
#include "polyrep/schemes.hpp"

using namespace polyrep;

static void SubdivideOnceB222(benchmark::State& state) {
  const Mask mask = three_directional(2, 2, 2);
  const int radius = static_cast<int>(state.range(0));
  const ParamShift tau(2, Rational(2));
  const GridData data = sample_polynomial(PolyFunc::monomial(2, MultiIndex{1, 0}), tau, 2, 0,
                                          Box::cube(2, radius));
  for (auto _ : state) {
    GridData out = subdivide_once(mask, data);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SubdivideOnceB222)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void StepwiseOracleButterfly(benchmark::State& state) {
  const Mask mask = butterfly();
  const ParamShift tau(2, Rational(0));
  const PolyFunc pi = PolyFunc::monomial(2, MultiIndex{2, 1});
  const Box box = default_oracle_box(mask);
  for (auto _ : state) {
    OracleReport report = stepwise_oracle(mask, pi, tau, 0, box);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(StepwiseOracleButterfly);

static void CascadeLevels(benchmark::State& state) {
  const Mask mask = three_directional(2, 2, 2);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GridData grid = cascade(mask, r);
    benchmark::DoNotOptimize(grid);
  }
  state.SetComplexityN(r);
}
BENCHMARK(CascadeLevels)->DenseRange(2, 8, 2);

static void CascadeTrivariate(benchmark::State& state) {
  const Mask mask = three_dim_example();
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GridData grid = cascade(mask, r);
    benchmark::DoNotOptimize(grid);
  }
}
BENCHMARK(CascadeTrivariate)->DenseRange(2, 5);
