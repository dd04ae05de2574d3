#pragma once

#include <optional>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/rational.hpp"

namespace atlas {

struct PathRecord {
  std::vector<VertexId> vertices;
  Rational length;
};

// Canonical shortest-path tree of one source. Among equal-length candidate
// paths the tree keeps the one with fewer hops, then the smaller parent edge
// id; `had_ties` records whether any such choice had to be made.
struct ShortestPathTree {
  VertexId source = kNoVertex;
  std::vector<std::optional<Rational>> dist;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<std::size_t> hops;
  // Largest distance from v to one of its tree descendants (0 for leaves).
  std::vector<Rational> reach;
  // Reachable vertices in settle order (non-decreasing distance).
  std::vector<VertexId> order;
  std::vector<std::vector<VertexId>> children;
  bool had_ties = false;

  bool reachable(VertexId v) const { return dist[v].has_value(); }
  // Tree path from the source to `target`; empty vertex list if unreachable.
  PathRecord path_to(VertexId target) const;
  std::size_t leaf_count() const;
};

ShortestPathTree shortest_path_tree(const WeightedGraph& g, VertexId source);

// All-pairs distances; nullopt marks a disconnected pair.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::vector<std::vector<std::optional<Rational>>> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  const std::optional<Rational>& operator()(VertexId u, VertexId v) const { return rows_[u][v]; }
  bool finite(VertexId u, VertexId v) const { return rows_[u][v].has_value(); }

 private:
  std::vector<std::vector<std::optional<Rational>>> rows_;
};

std::vector<ShortestPathTree> all_shortest_path_trees(const WeightedGraph& g);
DistanceMatrix distance_matrix(std::span<const ShortestPathTree> trees);
DistanceMatrix distance_matrix(const WeightedGraph& g);

// nullopt when u and v lie in different components.
std::optional<Rational> distance(const WeightedGraph& g, VertexId u, VertexId v);

// Closed ball {v : dist(u,v) <= r}, ascending.
std::vector<VertexId> ball(const WeightedGraph& g, VertexId u, const Rational& r);

struct MetricCheck {
  bool metric = true;
  // First edge (by id) whose weight exceeds the distance between its ends.
  std::optional<EdgeId> witness;
};

// True iff every edge is a shortest path between its endpoints. Throws
// InvalidInput on a disconnected graph.
MetricCheck is_metric(const WeightedGraph& g);

}  // namespace atlas
