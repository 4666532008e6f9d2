#include <benchmark/benchmark.h>

#include "polyrep/analysis.hpp"
#include "polyrep/schemes.hpp"

using namespace polyrep;

static void SymbolProduct(benchmark::State& state) {
  const LaurentPoly a = three_directional(2, 2, 2).symbol();
  const LaurentPoly b = butterfly().symbol();
  for (auto _ : state) {
    LaurentPoly prod = a * b;
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(SymbolProduct);

static void CheckZ5Butterfly(benchmark::State& state) {
  const Mask mask = butterfly();
  for (auto _ : state) {
    auto result = check_Z(mask, 5);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(CheckZ5Butterfly);

static void AnalyzeScheme(benchmark::State& state) {
  const auto& schemes = builtin_schemes();
  const Mask mask = schemes[state.range(0)].make();
  for (auto _ : state) {
    AnalysisReport report = analyze(mask, 10);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(AnalyzeScheme)->DenseRange(0, 5);

static void MomentCheckButterfly(benchmark::State& state) {
  const Mask mask = butterfly();
  const ParamShift tau(2, Rational(0));
  const int window = default_moment_window(mask);
  for (auto _ : state) {
    auto result = moment_condition_check(mask, tau, 3, window);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(MomentCheckButterfly);
