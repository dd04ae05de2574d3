#include <benchmark/benchmark.h>

#include "atlas/gadgets.hpp"
#include "atlas/shortest_paths.hpp"
#include "atlas/skeleton.hpp"

namespace {

void BM_ShortestPathTrees(benchmark::State& state) {
  const auto g = atlas::binary_tree_geometric(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::all_shortest_path_trees(g));
  state.SetComplexityN(static_cast<long>(g.vertex_count()));
}
BENCHMARK(BM_ShortestPathTrees)->DenseRange(1, 3)->Complexity();

void BM_SkeletonSweep(benchmark::State& state) {
  const auto g = atlas::caterpillar(static_cast<std::size_t>(state.range(0)), atlas::CaterpillarVariant::skeleton_three).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::skeleton_dimension(g));
  state.SetComplexityN(static_cast<long>(g.vertex_count()));
}
BENCHMARK(BM_SkeletonSweep)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SkeletonBruteForce(benchmark::State& state) {
  const auto g = atlas::caterpillar(static_cast<std::size_t>(state.range(0)), atlas::CaterpillarVariant::skeleton_three).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::brute_force_skeleton_dimension(g));
}
BENCHMARK(BM_SkeletonBruteForce)->RangeMultiplier(2)->Range(4, 16);

}  // namespace
