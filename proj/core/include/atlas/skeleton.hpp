#pragma once

#include <cstddef>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/rational.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

// The part of tree edge (parent -> child) that belongs to the skeleton, in
// source-distance coordinates: lo = dist(parent),
// hi = min(dist(child), 2/3 * (dist(child) + reach(child))).
struct SkeletonInterval {
  EdgeId edge;
  VertexId parent;
  VertexId child;
  Rational lo;
  Rational hi;
};

struct CutProfile {
  VertexId source = kNoVertex;
  std::vector<Rational> breakpoints;
  std::size_t max_cut = 0;
  Rational argmax_radius;
};

struct SkeletonResult {
  std::size_t kappa = 0;
  VertexId witness_source = kNoVertex;
  Rational witness_radius;
  bool had_ties = false;
};

std::vector<SkeletonInterval> skeleton_intervals(const ShortestPathTree& spt);

// Largest number of skeleton points at a common source distance. Breakpoints
// are evaluated with points deduplicated by vertex; open segments between them
// are evaluated at their midpoints. The smallest maximizing radius is reported.
CutProfile max_cut(std::span<const SkeletonInterval> intervals, const ShortestPathTree& spt);

// Number of skeleton points at exactly radius r.
std::size_t cut_size(std::span<const SkeletonInterval> intervals, const ShortestPathTree& spt, const Rational& r);

SkeletonResult skeleton_dimension(const WeightedGraph& g);
SkeletonResult skeleton_dimension(const WeightedGraph& g, std::span<const ShortestPathTree> trees);

// Direct evaluation of the skeleton definition, point by point, without the
// interval sweep. Intended as a cross-check on small graphs.
std::size_t brute_force_skeleton_dimension(const WeightedGraph& g, std::size_t cap = 64);

// Leaves of the skeleton of `spt` (geometric subtree), counted exactly.
std::size_t skeleton_leaf_count(std::span<const SkeletonInterval> intervals, const ShortestPathTree& spt);

}  // namespace atlas
