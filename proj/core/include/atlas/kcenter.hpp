#pragma once

#include <cstddef>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/rational.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

struct CenterSolution {
  std::vector<VertexId> centers;  // ascending
  Rational radius;
};

// max over v of min over c of dist(v, c).
Rational covering_radius(const DistanceMatrix& dist, std::span<const VertexId> centers);

// Farthest-point greedy 2-approximation: start at vertex 0, then repeatedly
// add the vertex farthest from the chosen centers (smallest id on ties).
CenterSolution hochbaum_shmoys(const WeightedGraph& g, std::size_t k);
CenterSolution hochbaum_shmoys(const DistanceMatrix& dist, std::size_t k);

inline constexpr std::size_t kDefaultKCenterCap = 18;

// Optimal k-center by enumerating k-subsets in lexicographic order; the first
// optimal subset is returned.
CenterSolution exact_kcenter(const WeightedGraph& g, std::size_t k, std::size_t cap = kDefaultKCenterCap);
CenterSolution exact_kcenter(const DistanceMatrix& dist, std::size_t k, std::size_t cap = kDefaultKCenterCap);

}  // namespace atlas
