#pragma once

#include <cstddef>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/rational.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

struct DoublingResult {
  // Smallest d such that every ball B_r(u) is covered by d balls of radius r/2.
  std::size_t constant = 1;
  double dimension = 0.0;  // log2(constant)
  VertexId center = kNoVertex;
  Rational radius;
  std::vector<VertexId> cover_centers;
};

inline constexpr std::size_t kDefaultDoublingCap = 16;

// Ball centers are vertices; radii range over the pairwise distances.
DoublingResult doubling_dimension(const DistanceMatrix& dist, std::size_t cap = kDefaultDoublingCap);
DoublingResult doubling_dimension(const WeightedGraph& g, std::size_t cap = kDefaultDoublingCap);

}  // namespace atlas
