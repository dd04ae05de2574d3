#include "atlas/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "atlas/error.hpp"

namespace atlas {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count), labels_(vertex_count) {
  std::iota(labels_.begin(), labels_.end(), std::int64_t{0});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    Edge& ed = edges_[e];
    if (ed.u >= vertex_count || ed.v >= vertex_count) {
      throw InvalidInput("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                         std::to_string(vertex_count) + "-1");
    }
    if (ed.u == ed.v) throw InvalidInput("self-loop at vertex " + std::to_string(ed.u));
    ed.weight.canonicalize();
    if (ed.weight <= 0) {
      throw InvalidInput("non-positive weight " + to_string(ed.weight) + " on edge {" + std::to_string(ed.u) +
                         "," + std::to_string(ed.v) + "}");
    }
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.emplace(key.first, key.second).second) {
      throw InvalidInput("duplicate edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) + "}");
    }
    adjacency_[ed.u].push_back(e);
    adjacency_[ed.v].push_back(e);
  }
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId u, VertexId v) const {
  const auto& inc = adjacency_.at(u);
  for (EdgeId e : inc) {
    if (other_end(e, u) == v) return e;
  }
  return std::nullopt;
}

WeightedGraph WeightedGraph::unweighted() const {
  std::vector<Edge> unit;
  unit.reserve(edges_.size());
  for (const Edge& e : edges_) unit.push_back({e.u, e.v, Rational(1)});
  WeightedGraph g(vertex_count(), std::move(unit));
  g.labels_ = labels_;
  return g;
}

WeightedGraph build_graph(std::span<const LabeledEdge> edges) {
  std::map<std::int64_t, VertexId> index;
  for (const auto& e : edges) {
    index.emplace(e.u, 0);
    index.emplace(e.v, 0);
  }
  std::vector<std::int64_t> labels;
  labels.reserve(index.size());
  for (auto& [label, id] : index) {
    id = labels.size();
    labels.push_back(label);
  }
  std::vector<Edge> dense;
  dense.reserve(edges.size());
  for (const auto& e : edges) dense.push_back({index[e.u], index[e.v], e.weight});
  WeightedGraph g(labels.size(), std::move(dense));
  g.labels_ = std::move(labels);
  return g;
}

std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId e : g.incident(comp[i])) {
        VertexId w = g.other_end(e, comp[i]);
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const WeightedGraph& g) { return connected_components(g).size() <= 1; }

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) edges.push_back({local[e.u], local[e.v], e.weight});
  }
  return WeightedGraph(vertices.size(), std::move(edges));
}

}  // namespace atlas
