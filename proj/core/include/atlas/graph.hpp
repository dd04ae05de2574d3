#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "atlas/rational.hpp"

namespace atlas {

using VertexId = std::size_t;
using EdgeId = std::size_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
  VertexId u;
  VertexId v;
  Rational weight;
};

// Edge with caller-chosen vertex labels, used by build_graph.
struct LabeledEdge {
  std::int64_t u;
  std::int64_t v;
  Rational weight;
};

// Immutable undirected simple graph with strictly positive rational weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Vertices are 0..vertex_count-1. Rejects self-loops, parallel edges,
  // out-of-range endpoints and non-positive weights with InvalidInput.
  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return adjacency_.at(v); }

  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

  // Original label of each dense vertex id (identity unless built by build_graph).
  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  std::int64_t label(VertexId v) const { return labels_.at(v); }

  // The same topology with every weight set to 1.
  WeightedGraph unweighted() const;

 private:
  friend WeightedGraph build_graph(std::span<const LabeledEdge> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::vector<std::int64_t> labels_;
};

// Vertex ids are the union of endpoint labels, densely re-indexed in ascending
// label order; the label map is retained on the graph.
WeightedGraph build_graph(std::span<const LabeledEdge> edges);

// Connected components, each as an ascending vertex list; components are
// ordered by their smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

// Induced subgraph on `vertices` (renumbered in the given order).
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> vertices);

}  // namespace atlas
