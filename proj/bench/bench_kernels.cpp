#include <benchmark/benchmark.h>

#include "boxcube/box.hpp"
#include "boxcube/cube.hpp"
#include "boxcube/generate.hpp"
#include "boxcube/interval.hpp"
#include "boxcube/reference.hpp"

namespace {

using namespace boxcube;

void BM_IntervalGraph(benchmark::State& state) {
  const auto rep = random_interval_rep(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_graph_of_intervals(rep));
}
void BM_IntervalGraphSerial(benchmark::State& state) {
  const auto rep = random_interval_rep(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::intersection_graph_of_intervals(rep));
}

void BM_CubeGraph(benchmark::State& state) {
  const auto cube = interval_to_cube(random_interval_rep(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_graph_of_cubes(cube));
}
void BM_CubeGraphSerial(benchmark::State& state) {
  const auto cube = interval_to_cube(random_interval_rep(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(reference::intersection_graph_of_cubes(cube));
}

void BM_IntervalToCube(benchmark::State& state) {
  const auto rep = random_interval_rep(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(interval_to_cube(rep));
  state.SetComplexityN(state.range(0));
}
void BM_IntervalToCubeSerial(benchmark::State& state) {
  const auto rep = random_interval_rep(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::interval_to_cube(rep));
  state.SetComplexityN(state.range(0));
}

void BM_BoxToCube(benchmark::State& state) {
  const auto rep = random_box_rep(static_cast<int>(state.range(0)), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(box_to_cube(rep));
}
void BM_BoxToCubeSerial(benchmark::State& state) {
  const auto rep = random_box_rep(static_cast<int>(state.range(0)), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(reference::box_to_cube(rep));
}

// Worst case for the recognizer: a non-interval graph exhausts all orderings.
void BM_RecognizeCycle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_interval_brute(g));
}
void BM_RecognizeCycleSerial(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::recognize_interval_brute(g));
}

BENCHMARK(BM_IntervalGraph)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_IntervalGraphSerial)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_CubeGraph)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_CubeGraphSerial)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_IntervalToCube)->RangeMultiplier(2)->Range(256, 4096)->Complexity();
BENCHMARK(BM_IntervalToCubeSerial)->RangeMultiplier(2)->Range(256, 4096)->Complexity();
BENCHMARK(BM_BoxToCube)->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_BoxToCubeSerial)->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_RecognizeCycle)->DenseRange(5, 8);
BENCHMARK(BM_RecognizeCycleSerial)->DenseRange(5, 8);

}  // namespace

BENCHMARK_MAIN();
