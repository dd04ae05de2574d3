#include <gtest/gtest.h>

#include <random>

#include "atlas/error.hpp"
#include "atlas/hitting_set.hpp"
#include "oracles.hpp"

namespace {

using atlas::VertexId;

atlas::HittingSetInstance edge_family(const atlas::WeightedGraph& g) {
  atlas::HittingSetInstance inst;
  for (const auto& e : g.edges()) inst.family.push_back({e.u, e.v});
  for (VertexId v = 0; v < g.vertex_count(); ++v) inst.candidates.push_back(v);
  return inst;
}

TEST(HittingSet, DisjointSingletons) {
  atlas::HittingSetInstance inst{{{0}, {1}}, {0, 1}, std::nullopt};
  EXPECT_EQ(atlas::min_hitting_set(inst), (std::vector<VertexId>{0, 1}));
}

TEST(HittingSet, FourCycleEdges) {
  EXPECT_EQ(atlas::min_hitting_set(edge_family(oracle::cycle_graph(4))).size(), 2u);
}

TEST(HittingSet, InfeasibleSetIsNamed) {
  atlas::HittingSetInstance inst{{{0}, {2, 3}}, {0, 1}, std::nullopt};
  try {
    atlas::min_hitting_set(inst);
    FAIL() << "expected InvalidInput";
  } catch (const atlas::InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(HittingSet, MatchesExhaustiveSearch) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> size(1, 4), pick(0, 11), count(1, 14);
  for (int round = 0; round < 60; ++round) {
    std::vector<std::vector<VertexId>> family(count(rng));
    for (auto& s : family) {
      int k = size(rng);
      for (int i = 0; i < k; ++i) s.push_back(pick(rng));
    }
    std::vector<VertexId> candidates(12);
    for (VertexId v = 0; v < 12; ++v) candidates[v] = v;
    auto got = atlas::min_hitting_set(atlas::HittingSetInstance{family, candidates, std::nullopt});
    EXPECT_EQ(got.size(), oracle::min_hitting_set(family, candidates));
    for (const auto& s : family) {
      EXPECT_TRUE(std::any_of(s.begin(), s.end(), [&](VertexId v) { return std::count(got.begin(), got.end(), v); }));
    }
  }
}

TEST(HittingSet, BoundsBracketOptimum) {
  std::vector<atlas::VertexMask> family{0b0011, 0b0110, 0b1100, 0b1001};
  std::size_t opt = std::popcount(atlas::min_hitting_set(family, 0b1111));
  EXPECT_EQ(opt, 2u);
  EXPECT_LE(atlas::disjoint_packing_lower_bound(family), opt);
  EXPECT_GE(atlas::greedy_hitting_upper_bound(family), opt);
}

TEST(HittingSet, FamilyCap) {
  std::vector<atlas::VertexMask> family(10, 1);
  EXPECT_THROW(atlas::min_hitting_set(family, 1, 5), atlas::CapExceeded);
}

TEST(VertexCover, SmallGraphs) {
  EXPECT_EQ(atlas::min_vertex_cover(atlas::WeightedGraph(2, {{0, 1, 1}})).size(), 1u);
  EXPECT_EQ(atlas::min_vertex_cover(oracle::cycle_graph(5)).size(), 3u);
  EXPECT_EQ(atlas::min_vertex_cover(oracle::path_graph(4)).size(), 2u);
  EXPECT_EQ(atlas::min_vertex_cover(oracle::petersen_graph()).size(), 6u);
}

TEST(VertexCover, MatchesExhaustiveSearch) {
  std::mt19937 rng(17);
  for (int round = 0; round < 30; ++round) {
    auto g = oracle::random_connected_graph(4 + round % 9, 0.3, oracle::Weights::unit, rng);
    auto cover = atlas::min_vertex_cover(g);
    EXPECT_EQ(cover.size(), oracle::vertex_cover(g));
    for (const auto& e : g.edges()) {
      EXPECT_TRUE(std::count(cover.begin(), cover.end(), e.u) || std::count(cover.begin(), cover.end(), e.v));
    }
  }
}

}  // namespace
