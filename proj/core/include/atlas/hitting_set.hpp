#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "atlas/graph.hpp"

namespace atlas {

// Vertex subset of a universe of at most 64 elements.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaskUniverse = 64;

inline VertexMask bit(VertexId v) { return VertexMask{1} << v; }
std::vector<VertexId> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(std::span<const VertexId> vertices);

struct HittingSetInstance {
  std::vector<std::vector<VertexId>> family;
  std::vector<VertexId> candidates;
  std::optional<std::size_t> cap;
};

inline constexpr std::size_t kDefaultHittingFamilyCap = 5000;

// Exact minimum hitting set restricted to `candidates`. Branch and bound:
// branch on the vertices of a smallest unhit set, seed with a greedy solution,
// prune with a greedy packing of pairwise disjoint unhit sets. Ties resolve
// toward smaller vertex ids, so equal inputs give equal outputs.
// Throws InvalidInput naming the first set that misses every candidate.
std::vector<VertexId> min_hitting_set(const HittingSetInstance& instance);

// Mask-level entry point used by the parameter solvers.
VertexMask min_hitting_set(std::span<const VertexMask> family, VertexMask candidates,
                           std::size_t cap = kDefaultHittingFamilyCap);

// Cheap bounds on the optimum of a mask family (all sets already restricted
// to candidates and non-empty).
std::size_t greedy_hitting_upper_bound(std::span<const VertexMask> family);
std::size_t disjoint_packing_lower_bound(std::span<const VertexMask> family);

// Exact minimum vertex cover of the (unweighted) graph.
std::vector<VertexId> min_vertex_cover(const WeightedGraph& g, std::size_t cap = 24);

}  // namespace atlas
