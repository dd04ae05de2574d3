#include <benchmark/benchmark.h>

#include "atlas/classic.hpp"
#include "atlas/gadgets.hpp"
#include "atlas/highway.hpp"
#include "atlas/kcenter.hpp"

namespace {

void BM_HighwayHd2SubdividedStar(benchmark::State& state) {
  const auto g = atlas::subdivided_star(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::highway_dimension(g, atlas::HighwayDefinition::hd2));
}
BENCHMARK(BM_HighwayHd2SubdividedStar)->DenseRange(2, 6, 2);

void BM_HighwayHd1ExpClique(benchmark::State& state) {
  const auto g = atlas::complete_graph_exp_weights(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::highway_dimension(g, atlas::HighwayDefinition::hd1));
}
BENCHMARK(BM_HighwayHd1ExpClique)->DenseRange(3, 6);

void BM_MaxLeaf(benchmark::State& state) {
  const auto g = atlas::complete_graph_exp_weights(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::max_leaf_number(g));
}
BENCHMARK(BM_MaxLeaf)->DenseRange(4, 7);

void BM_Bandwidth(benchmark::State& state) {
  const auto g = atlas::caterpillar(static_cast<std::size_t>(state.range(0)), atlas::CaterpillarVariant::skeleton_three).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::bandwidth(g));
}
BENCHMARK(BM_Bandwidth)->DenseRange(2, 6, 2);

void BM_PathwidthTree(benchmark::State& state) {
  const auto g = atlas::binary_tree_geometric(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::pathwidth(g));
}
BENCHMARK(BM_PathwidthTree)->DenseRange(1, 3);

void BM_Treewidth(benchmark::State& state) {
  const auto g = atlas::subdivided_grid(2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::treewidth(g));
}
BENCHMARK(BM_Treewidth);

void BM_KCenterGreedy(benchmark::State& state) {
  const auto g = atlas::subdivided_grid(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(atlas::hochbaum_shmoys(g, 3));
}
BENCHMARK(BM_KCenterGreedy)->DenseRange(2, 4);

void BM_KCenterExact(benchmark::State& state) {
  const auto g = atlas::caterpillar(6, atlas::CaterpillarVariant::hd1_constant).graph;
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atlas::exact_kcenter(g, k));
}
BENCHMARK(BM_KCenterExact)->DenseRange(1, 3);

}  // namespace
