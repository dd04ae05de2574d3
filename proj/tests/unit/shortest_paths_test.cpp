#include <gtest/gtest.h>

#include <random>

#include "atlas/error.hpp"
#include "atlas/shortest_paths.hpp"
#include "oracles.hpp"

namespace {

using atlas::make_rational;
using atlas::Rational;
using atlas::VertexId;
using atlas::WeightedGraph;

TEST(ShortestPaths, MatchesFloydWarshallOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    auto weights = static_cast<oracle::Weights>(round % 3);
    WeightedGraph g = oracle::random_connected_graph(3 + round % 9, 0.3, weights, rng);
    auto expected = oracle::floyd_warshall(g);
    auto d = atlas::distance_matrix(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(d(u, v), expected[u][v]);
    }
  }
}

TEST(ShortestPaths, TreePathsAreShortest) {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    WeightedGraph g = oracle::random_connected_graph(8, 0.4, oracle::Weights::small_integer, rng);
    auto expected = oracle::floyd_warshall(g);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      auto spt = atlas::shortest_path_tree(g, s);
      for (VertexId t = 0; t < g.vertex_count(); ++t) {
        auto p = spt.path_to(t);
        ASSERT_EQ(p.vertices.front(), s);
        ASSERT_EQ(p.vertices.back(), t);
        EXPECT_EQ(p.length, *expected[s][t]);
        EXPECT_EQ(oracle::path_length(g, p.vertices), p.length);
        EXPECT_EQ(spt.hops[t] + 1, p.vertices.size());
      }
    }
  }
}

TEST(ShortestPaths, ReachIsFarthestDescendant) {
  // 0 -1- 1 -2- 2, 1 -5- 3
  WeightedGraph g(4, {{0, 1, 1}, {1, 2, 2}, {1, 3, 5}});
  auto spt = atlas::shortest_path_tree(g, 0);
  EXPECT_EQ(spt.reach[0], Rational(6));
  EXPECT_EQ(spt.reach[1], Rational(5));
  EXPECT_EQ(spt.reach[2], Rational(0));
  EXPECT_EQ(spt.leaf_count(), 3u);  // the root has degree 1
  EXPECT_FALSE(spt.had_ties);
}

TEST(ShortestPaths, TiesPreferFewerHopsThenSmallerEdge) {
  // 0-1-2 with total 2 and the direct edge 0-2 of weight 2.
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}});
  auto spt = atlas::shortest_path_tree(g, 0);
  EXPECT_TRUE(spt.had_ties);
  EXPECT_EQ(spt.parent[2], 0u);
  EXPECT_EQ(spt.parent_edge[2], 2u);

  WeightedGraph square = oracle::cycle_graph(4);
  auto sq = atlas::shortest_path_tree(square, 0);
  EXPECT_TRUE(sq.had_ties);
  EXPECT_EQ(sq.parent[2], 1u);  // edge {1,2} has id 1, edge {2,3} has id 2
}

TEST(ShortestPaths, TemporaryTiesAreNotFlagged) {
  // Vertex 2 is first reached at distance 10 twice, then improved to 3.
  WeightedGraph g(4, {{0, 1, 5}, {1, 2, 5}, {0, 3, 1}, {3, 2, 2}, {0, 2, 10}});
  auto spt = atlas::shortest_path_tree(g, 0);
  EXPECT_FALSE(spt.had_ties);
  EXPECT_EQ(*spt.dist[2], Rational(3));
}

TEST(ShortestPaths, DisconnectedPairsAreAbsent) {
  WeightedGraph g(3, {{0, 1, 1}});
  auto d = atlas::distance_matrix(g);
  EXPECT_FALSE(d.finite(0, 2));
  EXPECT_FALSE(atlas::distance(g, 2, 1).has_value());
  auto spt = atlas::shortest_path_tree(g, 0);
  EXPECT_TRUE(spt.path_to(2).vertices.empty());
}

TEST(ShortestPaths, BallIsClosed) {
  WeightedGraph g = oracle::path_graph(5);
  EXPECT_EQ(atlas::ball(g, 2, 1), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(atlas::ball(g, 0, make_rational(1, 2)), (std::vector<VertexId>{0}));
}

TEST(ShortestPaths, MetricCheckFindsShortcutEdge) {
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
  auto check = atlas::is_metric(g);
  EXPECT_FALSE(check.metric);
  EXPECT_EQ(check.witness, std::optional<atlas::EdgeId>(2));
  EXPECT_TRUE(atlas::is_metric(oracle::petersen_graph()).metric);
  EXPECT_THROW(atlas::is_metric(WeightedGraph(3, {{0, 1, 1}})), atlas::InvalidInput);
}

}  // namespace
