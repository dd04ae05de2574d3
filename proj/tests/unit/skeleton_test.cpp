#include <gtest/gtest.h>

#include <random>

#include "atlas/error.hpp"
#include "atlas/gadgets.hpp"
#include "atlas/skeleton.hpp"
#include "oracles.hpp"

namespace {

using atlas::make_rational;
using atlas::Rational;
using atlas::WeightedGraph;

TEST(SkeletonIntervals, SingleEdgeDropsLastThird) {
  WeightedGraph g(2, {{0, 1, 1}});
  auto iv = atlas::skeleton_intervals(atlas::shortest_path_tree(g, 0));
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_EQ(iv[0].lo, Rational(0));
  EXPECT_EQ(iv[0].hi, make_rational(2, 3));
}

TEST(SkeletonIntervals, PathOfTwoEdges) {
  WeightedGraph g = oracle::path_graph(3);
  auto spt = atlas::shortest_path_tree(g, 0);
  auto iv = atlas::skeleton_intervals(spt);
  ASSERT_EQ(iv.size(), 2u);
  EXPECT_EQ(iv[0].hi, Rational(1));
  EXPECT_EQ(iv[1].lo, Rational(1));
  EXPECT_EQ(iv[1].hi, make_rational(4, 3));
  EXPECT_EQ(atlas::max_cut(iv, spt).max_cut, 1u);
  EXPECT_EQ(atlas::skeleton_leaf_count(iv, spt), 2u);  // both ends of the path
}

TEST(SkeletonIntervals, StarFromCenter) {
  auto star = atlas::star(5);
  auto spt = atlas::shortest_path_tree(star.graph, 0);
  auto iv = atlas::skeleton_intervals(spt);
  ASSERT_EQ(iv.size(), 4u);
  for (const auto& i : iv) EXPECT_EQ(i.hi, make_rational(2, 3));
  auto profile = atlas::max_cut(iv, spt);
  EXPECT_EQ(profile.max_cut, 4u);
  EXPECT_EQ(atlas::cut_size(iv, spt, make_rational(1, 3)), 4u);
  EXPECT_EQ(atlas::cut_size(iv, spt, Rational(1)), 0u);
}

TEST(SkeletonDimension, SmallExamples) {
  EXPECT_EQ(atlas::skeleton_dimension(WeightedGraph(2, {{0, 1, 1}})).kappa, 1u);
  EXPECT_EQ(atlas::skeleton_dimension(atlas::star(5).graph).kappa, 4u);
  EXPECT_EQ(atlas::brute_force_skeleton_dimension(WeightedGraph(2, {{0, 1, 1}})), 1u);
  EXPECT_EQ(atlas::brute_force_skeleton_dimension(atlas::star(5).graph), 4u);
}

TEST(SkeletonDimension, CaterpillarWithHeavyBackboneHasThree) {
  auto cat = atlas::caterpillar(6, atlas::CaterpillarVariant::skeleton_three);
  for (atlas::VertexId s = 0; s < cat.graph.vertex_count(); ++s) {
    auto spt = atlas::shortest_path_tree(cat.graph, s);
    // Backbone sources see three branches; a leaf source sees only two.
    std::size_t expected = s < 6 ? 3 : 2;
    EXPECT_EQ(atlas::max_cut(atlas::skeleton_intervals(spt), spt).max_cut, expected) << "source " << s;
  }
  EXPECT_EQ(atlas::skeleton_dimension(cat.graph).kappa, 3u);
}

TEST(SkeletonDimension, GeometricBinaryTreeIsAtMostThree) {
  for (std::size_t d : {1u, 2u}) {
    auto tree = atlas::binary_tree_geometric(d);
    auto res = atlas::skeleton_dimension(tree.graph);
    EXPECT_LE(res.kappa, 3u);
    EXPECT_EQ(res.kappa, atlas::brute_force_skeleton_dimension(tree.graph));
  }
}

TEST(SkeletonDimension, MatchesGridOracleOnUniqueIntegerGraphs) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 25; ++round) {
    WeightedGraph g = oracle::random_unique_integer_graph(3 + round % 6, 0.35, 6, rng);
    auto res = atlas::skeleton_dimension(g);
    EXPECT_FALSE(res.had_ties);
    EXPECT_EQ(res.kappa, oracle::skeleton_dimension(g)) << "round " << round;
  }
}

TEST(SkeletonDimension, SweepMatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(99);
  for (int round = 0; round < 30; ++round) {
    auto weights = static_cast<oracle::Weights>(round % 3);
    WeightedGraph g = oracle::random_connected_graph(2 + round % 9, 0.3, weights, rng);
    EXPECT_EQ(atlas::skeleton_dimension(g).kappa, atlas::brute_force_skeleton_dimension(g));
  }
}

TEST(SkeletonDimension, WitnessRealisesValue) {
  auto g = atlas::caterpillar(4, atlas::CaterpillarVariant::skeleton_bandwidth).graph;
  auto res = atlas::skeleton_dimension(g);
  auto spt = atlas::shortest_path_tree(g, res.witness_source);
  EXPECT_EQ(atlas::cut_size(atlas::skeleton_intervals(spt), spt, res.witness_radius), res.kappa);
}

TEST(SkeletonDimension, BruteForceRespectsCap) {
  EXPECT_THROW(atlas::brute_force_skeleton_dimension(oracle::path_graph(10), 5), atlas::CapExceeded);
}

}  // namespace
