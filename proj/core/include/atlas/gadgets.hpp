#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "atlas/graph.hpp"
#include "atlas/rational.hpp"

namespace atlas {

enum class Relation { eq, le, ge };

std::string_view to_string(Relation rel);
Relation parse_relation(std::string_view text);
bool holds(const Rational& lhs, Relation rel, const Rational& rhs);

// Expected value of one parameter on a generated graph. Parameter names are
// the ones used by the compute command ("kappa", "hd1", "ml", ...), plus
// "metric" (1 for true) and "anchored_hd3" (the hd3 hitting set of the
// (x, 5/2) instance of a vertex-cover reduction).
struct Claim {
  std::string parameter;
  Relation relation = Relation::eq;
  Rational value;
};

struct GadgetSpec {
  std::string family;
  std::map<std::string, long> params;
  std::string variant;
  std::vector<Claim> claims;
};

struct Gadget {
  WeightedGraph graph;
  GadgetSpec spec;
};

void to_json(nlohmann::json& j, const Claim& c);
void from_json(const nlohmann::json& j, Claim& c);
void to_json(nlohmann::json& j, const GadgetSpec& s);
void from_json(const nlohmann::json& j, GadgetSpec& s);

// Star on n vertices: center 0, leaves 1..n-1, unit weights.
Gadget star(std::size_t n);

// Star with l spokes, each split by one vertex: center 0, middles 1..l,
// leaves l+1..2l, unit weights.
Gadget subdivided_star(std::size_t l);

// K_n on vertices 1..n (ids 0..n-1) with weight 4^max(i,j).
Gadget complete_graph_exp_weights(std::size_t n);

enum class CaterpillarVariant { hd2_lower_bound, skeleton_bandwidth, skeleton_three, hd1_constant };

std::string_view to_string(CaterpillarVariant v);
CaterpillarVariant parse_caterpillar_variant(std::string_view text);

// Backbone c_0..c_{b-1} (ids 0..b-1), a pendant leaf on every backbone vertex
// (ids b..2b-1) and one extra leaf on each backbone end (ids 2b, 2b+1), so
// every backbone vertex has degree 3 and n = 2b + 2. Backbone edges join
// consecutive c_i; all other edges are leaf edges.
//   hd2-lb:    backbone 1/n, leaf 1
//   skel-bw:   backbone 1, leaf weights putting every leaf at distance 2b from c_0
//   skel-3:    backbone 2, leaf 1
//   hd1-const: backbone 5, leaf 1
Gadget caterpillar(std::size_t b, CaterpillarVariant variant);

// Complete binary tree with 2d+1 levels (root at level 0); an edge from level
// j to j+1 weighs 3^-j. Vertices are numbered in heap order.
Gadget binary_tree_geometric(std::size_t d);

// q x q grid whose edges {u,v} become paths u x y v; grid vertices are joined
// by a path P in row-major order. P edges and u-x, y-v edges weigh 1, x-y
// weighs dist_P(u,v) + 1/2. Grid vertex (i,j) has id i*q + j; each grid edge
// (horizontal ones first, then vertical, row-major) adds x then y.
Gadget subdivided_grid(std::size_t q);

// Weights on a connected graph (n >= 3) making the skeleton dimension equal
// the max leaf number: for a max-leaf spanning tree T, tree edges at a leaf
// weigh 2, other tree edges 1/n, non-tree edges 5. The metric form instead
// gives a non-tree edge dist_T(u,v) - eps_e with distinct eps_e < 1/n^2
// chosen so that every shortest path is unique.
Gadget spanning_tree_tight_weights(const WeightedGraph& g, bool metric);

// Vertex-cover reduction for max degree <= 3: adds v* = n + v for every v
// and x = 2n; edges {v, v*} and original edges weigh 1, edges {v*, x} weigh 5.
Gadget vc_reduction(const WeightedGraph& g);

inline VertexId vc_reduction_hub(std::size_t original_n) { return 2 * original_n; }

// Generator lookup by family name for the command line.
std::vector<std::string> gadget_families();
Gadget make_gadget(std::string_view family, const std::map<std::string, long>& params, std::string_view variant,
                   const WeightedGraph* base = nullptr);

}  // namespace atlas
