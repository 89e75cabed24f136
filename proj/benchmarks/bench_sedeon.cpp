#include <benchmark/benchmark.h>

#include <array>

#include "sedeon/algebra.hpp"
#include "sedeon/field_lab.hpp"
#include "sedeon/grid.hpp"
#include "sedeon/matrix_rep.hpp"
#include "sedeon/random.hpp"
#include "sedeon/transforms.hpp"

using namespace sedeon;

static void BM_Multiply(benchmark::State& state) {
  SedeonSampler rng(1);
  const Sedeon a = rng.sedeon(), b = rng.sedeon();
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Multiply);

static void BM_Rotate(benchmark::State& state) {
  SedeonSampler rng(2);
  const Sedeon v = rng.sedeon();
  const Rotor r(0.7, rng.unit_vector());
  for (auto _ : state) benchmark::DoNotOptimize(rotate(v, r));
}
BENCHMARK(BM_Rotate);

static void BM_LorentzTransform(benchmark::State& state) {
  SedeonSampler rng(3);
  const Sedeon v = rng.sedeon();
  const Boost b = Boost::from_velocity(0.6, rng.unit_vector());
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_transform(v, b));
}
BENCHMARK(BM_LorentzTransform);

static void BM_LeftRegularMatrix(benchmark::State& state) {
  SedeonSampler rng(4);
  const Sedeon v = rng.sedeon();
  for (auto _ : state) benchmark::DoNotOptimize(left_regular_matrix(v));
}
BENCHMARK(BM_LeftRegularMatrix);

static void BM_SmallestSingularValue(benchmark::State& state) {
  const Matrix16 m = operator_matrix(1.5, {1.0, 0.2, -0.3}, WaveOperatorParams(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(smallest_singular_value(m));
}
BENCHMARK(BM_SmallestSingularValue);

static void BM_ApplyWaveOperator(benchmark::State& state) {
  SedeonSampler rng(5);
  const PlaneWaveField w{rng.sedeon(), 1.2, {0.3, 0.4, 0.5}};
  const WaveOperatorParams p(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(apply_wave_operator(w, p));
}
BENCHMARK(BM_ApplyWaveOperator);

static void BM_GridOperator(benchmark::State& state) {
  SedeonSampler rng(6);
  const WaveOperatorParams p(0.5);
  const GridField1D g = sample_mode({rng.sedeon(), 1.3, {1.0, 0, 0}}, 0.0, 0.01, static_cast<std::size_t>(state.range(0)), p);
  for (auto _ : state) benchmark::DoNotOptimize(grid_apply_wave_operator(g, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GridOperator)->Arg(64)->Arg(1024);

static void BM_GridConvergenceStudy(benchmark::State& state) {
  SedeonSampler rng(7);
  const WaveOperatorParams p(0.5);
  const PlaneWaveField mode{rng.sedeon(), 1.3, {1.0, 0, 0}};
  const std::array<double, 3> steps{0.1, 0.05, 0.025};
  for (auto _ : state) benchmark::DoNotOptimize(study_grid_convergence(mode, p, steps));
}
BENCHMARK(BM_GridConvergenceStudy);
BENCHMARK_MAIN();
