#include <benchmark/benchmark.h>

#include <random>

#include "axiskit/analysis.hpp"
#include "axiskit/ce_graphs.hpp"
#include "axiskit/generate.hpp"

using namespace axiskit;

static void BM_TraceAxes(benchmark::State& state) {
  const Projection p = build_twist(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_axes(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceAxes)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

static void BM_AxisSystem(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Projection p = random_knot_projection(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(axis_system(p));
}
BENCHMARK(BM_AxisSystem)->RangeMultiplier(2)->Range(8, 256);

static void BM_SystemsEqualTwist(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const AxisSystem s = axis_system(scrambled(build_twist(n), rng, true));
  const AxisSystem t = twist_template(n);
  for (auto _ : state) benchmark::DoNotOptimize(systems_equal(s, t));
}
BENCHMARK(BM_SystemsEqualTwist)->DenseRange(4, 24, 4);

static void BM_RecognizeTwist(benchmark::State& state) {
  const Projection p = build_twist(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_twist(p));
}
BENCHMARK(BM_RecognizeTwist)->DenseRange(4, 24, 4);

static void BM_QuadCycles(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Projection p = random_projection(static_cast<int>(state.range(0)), rng);
  const CeGraphs g = ce_graphs(p);
  for (auto _ : state) benchmark::DoNotOptimize(quad_cycles(g));
}
BENCHMARK(BM_QuadCycles)->RangeMultiplier(2)->Range(8, 128);

static void BM_Symmetry(benchmark::State& state) {
  const Projection p = build_twist(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_symmetric(p));
}
BENCHMARK(BM_Symmetry)->DenseRange(4, 24, 4);

BENCHMARK_MAIN();
