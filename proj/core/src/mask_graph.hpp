#pragma once

#include <vector>

#include "atlas/graph.hpp"
#include "atlas/hitting_set.hpp"

namespace atlas::detail {

// Unweighted component with local ids 0..size-1 and adjacency bitmasks.
struct MaskGraph {
  std::vector<VertexId> vertices;  // local id -> global id
  std::vector<VertexMask> adj;

  std::size_t size() const { return vertices.size(); }
  VertexMask all() const { return size() >= kMaskUniverse ? ~VertexMask{0} : bit(size()) - 1; }
};

MaskGraph mask_graph(const WeightedGraph& g, std::span<const VertexId> vertices);

// One MaskGraph per connected component; throws CapExceeded when the largest
// component exceeds `cap`.
std::vector<MaskGraph> component_mask_graphs(const WeightedGraph& g, const char* what, std::size_t cap);

// Vertices reachable from `start` inside `within`.
VertexMask reach_within(const MaskGraph& h, VertexId start, VertexMask within);

}  // namespace atlas::detail
