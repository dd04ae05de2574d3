#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "atlas/graph.hpp"

namespace atlas {

// Classic structural parameters. All of them ignore edge weights. Exact
// solvers run per connected component; the size caps apply to the largest
// component. Disconnected graphs combine component values by maximum, except
// distance to linear forest, which sums.

struct ClassicCaps {
  std::size_t max_leaf = 20;
  std::size_t bandwidth = 14;
  std::size_t pathwidth = 18;
  std::size_t treewidth = 18;
  std::size_t linear_forest = 20;
  // Forests bypass the subset DP for pathwidth and may be this large.
  std::size_t forest_pathwidth = 128;
};

struct MaxLeafResult {
  std::size_t value = 0;
  // Spanning forest (one tree per component) realising `value` leaves in
  // its largest-leaf component.
  std::vector<EdgeId> tree_edges;
};

// Labeling f: V -> {1..n}; position[v] = f(v).
struct Labeling {
  std::vector<std::size_t> position;
};

struct BandwidthResult {
  std::size_t value = 0;
  Labeling labeling;
};

enum class DecompositionKind { tree, path };

struct Decomposition {
  DecompositionKind kind = DecompositionKind::tree;
  std::vector<std::vector<VertexId>> bags;
  // For path decompositions bags i and i+1 are adjacent and this is empty.
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  // Largest bag size minus one (0 for an empty decomposition).
  std::size_t width() const;
};

struct WidthResult {
  std::size_t value = 0;
  Decomposition decomposition;
};

struct LinearForestResult {
  std::size_t value = 0;
  std::vector<VertexId> deleted;
};

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
};

MaxLeafResult max_leaf_number(const WeightedGraph& g, const ClassicCaps& caps = {});
BandwidthResult bandwidth(const WeightedGraph& g, const ClassicCaps& caps = {});
WidthResult pathwidth(const WeightedGraph& g, const ClassicCaps& caps = {});
WidthResult treewidth(const WeightedGraph& g, const ClassicCaps& caps = {});
LinearForestResult distance_to_linear_forest(const WeightedGraph& g, const ClassicCaps& caps = {});
std::size_t h_index(const WeightedGraph& g);
DegreeStats degree_stats(const WeightedGraph& g);

// Witness checks, each independent of the solvers above.
bool is_bijective(const Labeling& labeling, std::size_t n);
std::size_t labeling_bandwidth(const WeightedGraph& g, const Labeling& labeling);
bool is_spanning_forest(const WeightedGraph& g, std::span<const EdgeId> edges);
// Leaves of each tree of the forest, maximised over trees. A two-vertex tree
// has two leaves; an isolated vertex has none.
std::size_t max_leaves_in_forest(const WeightedGraph& g, std::span<const EdgeId> edges);
bool is_linear_forest_after(const WeightedGraph& g, std::span<const VertexId> deleted);

struct DecompositionCheck {
  bool shape = false;           // tree edges form a tree over the bags
  bool covers_vertices = false;
  bool covers_edges = false;
  bool connected_occurrences = false;

  bool valid() const { return shape && covers_vertices && covers_edges && connected_occurrences; }
};

DecompositionCheck check_decomposition(const WeightedGraph& g, const Decomposition& d);

// Tree decomposition induced by eliminating vertices in `order`.
Decomposition decomposition_from_elimination(const WeightedGraph& g, std::span<const VertexId> order);

}  // namespace atlas
