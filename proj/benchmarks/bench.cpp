#include <benchmark/benchmark.h>

#include "pmlopt/nelder_mead.hpp"
#include "pmlopt/objective.hpp"

using namespace pmlopt;

namespace {

void BM_Reflection(benchmark::State& state) {
  GridSpec grid;
  grid.m = static_cast<int>(state.range(0));
  grid.h = 0.25 / grid.m;
  const ProfileClass prof = RationalMinus{23.3, 121.3, 8};
  for (auto _ : state)
    benchmark::DoNotOptimize(reflection(prof, grid, 0.7).abs_R);
}
BENCHMARK(BM_Reflection)->Arg(5)->Arg(50);

void BM_ReflectionOracle(benchmark::State& state) {
  GridSpec grid;
  grid.m = static_cast<int>(state.range(0));
  grid.h = 0.25 / grid.m;
  const ProfileClass prof = RationalMinus{23.3, 121.3, 8};
  for (auto _ : state)
    benchmark::DoNotOptimize(reflection_oracle(prof, grid, 0.7).abs_R);
}
BENCHMARK(BM_ReflectionOracle)->Arg(5)->Arg(50);

void BM_AverageReflectivity(benchmark::State& state) {
  const ObjectiveSpec spec =
      make_objective_spec(GridSpec{}, static_cast<int>(state.range(0)));
  const ProfileClass prof = RationalMinus{23.3, 121.3, 8};
  for (auto _ : state)
    benchmark::DoNotOptimize(average_reflectivity(prof, spec));
}
BENCHMARK(BM_AverageReflectivity)->Arg(100)->Arg(200);

void BM_GaussLegendre(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_legendre(static_cast<int>(state.range(0)), 0.0, 1.0));
}
BENCHMARK(BM_GaussLegendre)->Arg(100);

void BM_NelderMeadQuadratic(benchmark::State& state) {
  const auto f = [](const std::vector<double>& x) {
    return (x[0] - 3.0) * (x[0] - 3.0) + (x[1] + 4.0) * (x[1] + 4.0);
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(nelder_mead(f, {0.0, 0.0}).best_value);
}
BENCHMARK(BM_NelderMeadQuadratic);

void BM_OptimizeRMinus(benchmark::State& state) {
  const ObjectiveSpec spec = make_objective_spec(GridSpec{}, 100);
  const int p = static_cast<int>(state.range(0));
  const auto f = [&](const std::vector<double>& x) {
    try {
      return average_reflectivity(RationalMinus{x[0], x[1], p}, spec);
    } catch (const std::exception&) {
      return 1e6;
    }
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(nelder_mead(f, {0.0, 50.0}).best_value);
}
BENCHMARK(BM_OptimizeRMinus)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
