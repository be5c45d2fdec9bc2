#include <benchmark/benchmark.h>

#include <cmath>

#include "cvge/cvge.hpp"

namespace {

using namespace cvge;

void BM_BuildGrid(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_grid(10.0, size));
}
BENCHMARK(BM_BuildGrid)->RangeMultiplier(4)->Range(64, 4096);

void BM_Discretize(benchmark::State& state) {
  const QuadratureGrid grid = build_grid(10.0, static_cast<std::size_t>(state.range(0)));
  const KernelSpec spec(1.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(discretize(spec, grid));
}
BENCHMARK(BM_Discretize)->RangeMultiplier(2)->Range(128, 1024);

void BM_TopEigenvalues(benchmark::State& state) {
  const auto dk = discretize(KernelSpec(1.0, 3.0), build_grid(10.0, static_cast<std::size_t>(state.range(0))));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(top_eigenvalues(dk, k));
}
BENCHMARK(BM_TopEigenvalues)->ArgsProduct({{256, 512, 1024}, {1, 4, 12}});

void BM_NumericEntanglement(benchmark::State& state) {
  const KernelSpec spec(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_entanglement(spec));
}
BENCHMARK(BM_NumericEntanglement)->Arg(1)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ReduceFullState(benchmark::State& state) {
  const GraphState tri(generate(GraphGenSpec::cycle(3)), 1.0);
  const QuadratureGrid grid = build_grid(10.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_full_state(tri, 0, grid));
}
BENCHMARK(BM_ReduceFullState)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_AlternatingMaximization(benchmark::State& state) {
  const GraphState p3(generate(GraphGenSpec::path(3)), 1.0);
  const QuadratureGrid grid = build_grid(10.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alternating_maximization(p3, 1, grid, 1e-12));
}
BENCHMARK(BM_AlternatingMaximization)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GraphState er(generate(GraphGenSpec::erdos_renyi(n, 10.0 / static_cast<double>(n), 1)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(profile(er));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Profile)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
