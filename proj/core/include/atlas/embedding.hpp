#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/rational.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

// Finite metric on points 0..n-1. The constructor rejects asymmetric
// matrices, non-zero diagonals, non-positive off-diagonal entries and
// triangle-inequality violations.
class FiniteMetric {
 public:
  FiniteMetric() = default;
  explicit FiniteMetric(std::vector<std::vector<Rational>> dist);

  // Shortest-path metric of a connected graph.
  static FiniteMetric from_graph(const WeightedGraph& g);

  std::size_t size() const noexcept { return dist_.size(); }
  const Rational& operator()(std::size_t u, std::size_t v) const { return dist_[u][v]; }
  DistanceMatrix distances() const;

 private:
  std::vector<std::vector<Rational>> dist_;
};

// Format: n, then n rows of n rationals.
FiniteMetric read_metric(std::istream& in);
FiniteMetric read_metric_file(const std::string& path);
void write_metric(std::ostream& out, const FiniteMetric& metric);

Rational min_distance(const FiniteMetric& x);
Rational max_distance(const FiniteMetric& x);
// max distance / min distance; needs at least two points.
Rational aspect_ratio(const FiniteMetric& x);

// Y_0 = X contains Y_1 contains ... Y_L, built over the metric rescaled so
// that its minimum distance is 1.
struct HubHierarchy {
  std::size_t levels = 0;  // L = ceil(log2(aspect ratio))
  Rational epsilon;
  Rational scale;  // minimum distance of the original metric
  std::vector<std::vector<std::size_t>> hubs;  // hubs[i] = Y_i, ascending

  // L with L = 0 replaced by 1 in the radius formulas.
  std::size_t effective_levels() const { return levels == 0 ? 1 : levels; }
  // eps 2^(i-2) / ((1+eps)^2 L), rescaled units.
  Rational covering_radius(long level) const;
  bool contains(std::size_t level, std::size_t point) const;
};

HubHierarchy build_hub_hierarchy(const FiniteMetric& x, const Rational& epsilon);

struct HierarchyCheck {
  bool base = false;        // Y_0 = X
  bool nesting = false;     // Y_i contains Y_{i+1}
  bool covering = false;    // every point within covering_radius(i) of Y_i
  bool separation = false;  // distinct hubs of Y_i farther than covering_radius(i) / 2

  bool valid() const { return base && nesting && covering && separation; }
};

HierarchyCheck check_hub_hierarchy(const FiniteMetric& x, const HubHierarchy& h);

struct EmbeddedGraph {
  WeightedGraph graph;     // pruned
  WeightedGraph unpruned;  // every pair, level-weighted
  HubHierarchy hierarchy;
  std::vector<std::size_t> edge_level;  // per edge of `graph`
};

// Pair {u,v} gets level i = max{j : u,v in Y_j} and weight
// (1 + eps (1 - i/L)) dist(u,v) (factor 1 when L = 0); it is dropped when the
// rescaled distance exceeds 2^(i+1). Weights are in the original units.
EmbeddedGraph build_embedded_graph(const FiniteMetric& x, const Rational& epsilon);

struct DistortionReport {
  bool within_bounds = true;
  Rational min_stretch;
  Rational max_stretch;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
};

// dist_X <= dist_G <= (1 + eps) dist_X for every pair, checked exactly.
DistortionReport verify_distortion(const FiniteMetric& x, const WeightedGraph& g, const Rational& epsilon);

// All-pairs distances of the pruned and unpruned graphs agree.
bool pruning_preserves_distances(const EmbeddedGraph& e);

// First edge of rescaled length > 2^i whose endpoints are not both in
// Y_{i-1}, if any.
std::optional<EdgeId> long_edge_violation(const EmbeddedGraph& e);

// (2^12 L / eps)^d' with d' = ceil(log2 doubling constant); L = 0 counts as 1.
Rational skeleton_bound(const HubHierarchy& h, std::size_t doubling_constant);

}  // namespace atlas
