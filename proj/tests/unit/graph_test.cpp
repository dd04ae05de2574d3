#include <gtest/gtest.h>

#include <sstream>

#include "atlas/error.hpp"
#include "atlas/graph.hpp"
#include "atlas/graph_io.hpp"
#include "atlas/rational.hpp"
#include "oracles.hpp"

namespace {

using atlas::Edge;
using atlas::InvalidInput;
using atlas::make_rational;
using atlas::Rational;
using atlas::WeightedGraph;

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(atlas::parse_rational("3"), make_rational(3));
  EXPECT_EQ(atlas::parse_rational("-2/4"), make_rational(-1, 2));
  EXPECT_EQ(atlas::parse_rational("0.125"), make_rational(1, 8));
  EXPECT_EQ(atlas::parse_rational("2.5"), make_rational(5, 2));
  EXPECT_THROW(atlas::parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(atlas::parse_rational("abc"), InvalidInput);
  EXPECT_THROW(atlas::parse_rational(""), InvalidInput);
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(atlas::to_string(make_rational(6, 4)), "3/2");
  EXPECT_EQ(atlas::to_string(make_rational(4, 2)), "2");
  EXPECT_EQ(atlas::power(Rational(2), -3), make_rational(1, 8));
  EXPECT_EQ(atlas::midpoint(make_rational(1), make_rational(2)), make_rational(3, 2));
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(WeightedGraph(2, {{0, 0, 1}}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 1}, {1, 0, 2}}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1}}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 0}}), InvalidInput);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, -1}}), InvalidInput);
}

TEST(Graph, AdjacencyAndComponents) {
  WeightedGraph g(5, {{0, 1, 1}, {1, 2, 2}, {3, 4, make_rational(1, 3)}});
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  auto comps = atlas::connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<atlas::VertexId>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<atlas::VertexId>{3, 4}));
  EXPECT_FALSE(atlas::is_connected(g));
  auto sub = atlas::induced_subgraph(g, std::vector<atlas::VertexId>{2, 1});
  EXPECT_EQ(sub.vertex_count(), 2u);
  EXPECT_EQ(sub.edge(0).weight, Rational(2));
}

TEST(Graph, BuildGraphReindexesLabels) {
  std::vector<atlas::LabeledEdge> edges{{10, 30, 1}, {30, 20, 2}};
  WeightedGraph g = atlas::build_graph(edges);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.label(0), 10);
  EXPECT_EQ(g.label(2), 30);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(GraphIo, NativeRoundTrip) {
  WeightedGraph g(3, {{0, 1, make_rational(1, 2)}, {1, 2, 3}});
  std::string text = atlas::format_graph(g, "triangle-free");
  std::istringstream in(text);
  WeightedGraph h = atlas::read_graph(in);
  ASSERT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.edge(0).weight, make_rational(1, 2));
  EXPECT_EQ(atlas::format_graph(h, "triangle-free"), text);
}

TEST(GraphIo, ReadsCommentsAndDecimals) {
  std::istringstream in("# hello\n3 2\n0 1 0.5\n1 2 3/4\n");
  WeightedGraph g = atlas::read_graph(in);
  EXPECT_EQ(g.edge(1).weight, make_rational(3, 4));
}

TEST(GraphIo, DimacsCollapsesArcPairs) {
  std::istringstream in("c sample\np sp 3 4\na 1 2 5\na 2 1 5\na 2 3 1\na 3 2 1\n");
  WeightedGraph g = atlas::read_graph(in);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(GraphIo, DimacsRejectsInconsistentPair) {
  std::istringstream in("p sp 2 2\na 1 2 5\na 2 1 4\n");
  EXPECT_THROW(atlas::read_graph(in), InvalidInput);
}

TEST(GraphIo, RejectsTruncatedInput) {
  std::istringstream in("3 2\n0 1 1\n");
  EXPECT_THROW(atlas::read_graph(in), InvalidInput);
}

TEST(GraphIo, OracleBuildersAreConnected) {
  EXPECT_TRUE(atlas::is_connected(oracle::petersen_graph()));
  EXPECT_EQ(oracle::petersen_graph().edge_count(), 15u);
  EXPECT_EQ(oracle::grid_graph(3, 4).edge_count(), 17u);
}

}  // namespace
