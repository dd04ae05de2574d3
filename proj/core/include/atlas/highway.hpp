#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/hitting_set.hpp"
#include "atlas/rational.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

enum class HighwayDefinition { hd1, hd2, hd3 };

std::string_view to_string(HighwayDefinition def);
HighwayDefinition parse_highway_definition(std::string_view text);

struct CatalogPath {
  std::vector<VertexId> vertices;
  Rational length;
  VertexMask mask = 0;

  bool single_vertex() const { return vertices.size() == 1; }
};

// Canonical shortest paths of every connected ordered pair, read off the
// canonical shortest-path trees. Paths that coincide up to direction are
// stored once; single-vertex paths are included.
class ShortestPathCatalog {
 public:
  static constexpr std::size_t kDefaultCap = 40;

  explicit ShortestPathCatalog(WeightedGraph g, std::size_t cap = kDefaultCap);

  const WeightedGraph& graph() const noexcept { return graph_; }
  const DistanceMatrix& distances() const noexcept { return distances_; }
  std::span<const ShortestPathTree> trees() const noexcept { return trees_; }
  std::span<const CatalogPath> paths() const noexcept { return paths_; }
  bool had_ties() const noexcept { return had_ties_; }

  // Index into paths() of the canonical path from u to v.
  std::optional<std::size_t> index_of(VertexId u, VertexId v) const { return pair_index_[u][v]; }
  // The ordered canonical path from u to v (read off the tree of u).
  PathRecord path(VertexId u, VertexId v) const { return trees_[u].path_to(v); }

 private:
  WeightedGraph graph_;
  std::vector<ShortestPathTree> trees_;
  DistanceMatrix distances_;
  std::vector<CatalogPath> paths_;
  std::vector<std::vector<std::optional<std::size_t>>> pair_index_;
  bool had_ties_ = false;
};

inline ShortestPathCatalog enumerate_shortest_paths(const WeightedGraph& g,
                                                    std::size_t cap = ShortestPathCatalog::kDefaultCap) {
  return ShortestPathCatalog(g, cap);
}

// A shortest path obtained from a catalog path by adding at most one vertex
// at each end. kNoVertex marks an end that is not extended.
struct PathExtension {
  VertexId left = kNoVertex;
  VertexId right = kNoVertex;
  Rational length;
};

// Every extension of the path that is itself a shortest path, the path itself
// first. A path is r-significant iff one of these is longer than r.
std::vector<PathExtension> path_extensions(const ShortestPathCatalog& catalog, std::size_t path_index);

// An r-witness of the path, if any (the first qualifying extension).
std::optional<PathRecord> r_witness(const ShortestPathCatalog& catalog, std::size_t path_index, const Rational& r);

// The paths an (anchor, radius) hitting set must hit, evaluated literally:
//   hd1: |p| > r and p inside the closed ball B_4r(anchor);
//   hd2: r < |p| <= 2r and p meets B_2r(anchor);
//   hd3: p has an r-witness meeting B_2r(anchor) (single vertices included).
// Returned as catalog indices in catalog order.
std::vector<std::size_t> paths_to_hit(const ShortestPathCatalog& catalog, VertexId anchor, const Rational& r,
                                      HighwayDefinition def);

// Radii at which paths_to_hit(anchor, ., def) can change, ascending, all > 0.
std::vector<Rational> critical_radii(const ShortestPathCatalog& catalog, VertexId anchor, HighwayDefinition def);

// Critical radii, the midpoints between consecutive ones, and half the
// smallest one (covering the open range below it).
std::vector<Rational> evaluation_radii(std::span<const Rational> critical);

struct HighwayWitness {
  HighwayDefinition definition = HighwayDefinition::hd2;
  std::size_t value = 0;
  VertexId anchor = kNoVertex;
  Rational radius;
  std::vector<VertexId> hitting_set;
  bool had_ties = false;
};

// Minimum hitting set of one (anchor, radius) instance. For hd1 hitters are
// restricted to B_4r(anchor); otherwise any vertex may be used.
HighwayWitness anchored_highway(const ShortestPathCatalog& catalog, VertexId anchor, const Rational& r,
                                HighwayDefinition def);

struct HighwayCaps {
  std::size_t hd1 = 24;
  std::size_t hd2 = 24;
  std::size_t hd3 = 16;
  std::size_t catalog = ShortestPathCatalog::kDefaultCap;
  std::size_t hitting_family = kDefaultHittingFamilyCap;
};

// Maximum over anchors and evaluation radii of the minimum hitting set size.
// The witness is the first maximizing (anchor, radius) in ascending order.
HighwayWitness highway_dimension(const ShortestPathCatalog& catalog, HighwayDefinition def,
                                 const HighwayCaps& caps = {});
HighwayWitness highway_dimension(const WeightedGraph& g, HighwayDefinition def, const HighwayCaps& caps = {});

}  // namespace atlas
