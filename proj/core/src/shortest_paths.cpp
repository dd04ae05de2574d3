#include "atlas/shortest_paths.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "atlas/error.hpp"

namespace atlas {
namespace {

struct Label {
  Rational dist;
  std::size_t hops;
  EdgeId via;
  VertexId vertex;
};

// Lexicographic (distance, hops, parent edge) key; the vertex id only breaks
// heap ties between different targets.
bool better(const Label& a, const Label& b) {
  if (int c = cmp(a.dist, b.dist); c != 0) return c < 0;
  if (a.hops != b.hops) return a.hops < b.hops;
  if (a.via != b.via) return a.via < b.via;
  return a.vertex < b.vertex;
}

struct HeapOrder {
  bool operator()(const Label& a, const Label& b) const { return better(b, a); }
};

}  // namespace

PathRecord ShortestPathTree::path_to(VertexId target) const {
  PathRecord p;
  if (!dist[target]) return p;
  for (VertexId v = target; v != kNoVertex; v = parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  p.length = *dist[target];
  return p;
}

std::size_t ShortestPathTree::leaf_count() const {
  std::size_t leaves = 0;
  for (VertexId v : order) {
    std::size_t degree = children[v].size() + (parent[v] == kNoVertex ? 0 : 1);
    if (degree == 1) ++leaves;
  }
  return leaves;
}

ShortestPathTree shortest_path_tree(const WeightedGraph& g, VertexId source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw InvalidInput("source vertex out of range");
  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n, std::nullopt);
  t.parent.assign(n, kNoVertex);
  t.parent_edge.assign(n, kNoEdge);
  t.hops.assign(n, 0);
  t.reach.assign(n, Rational(0));
  t.children.assign(n, {});

  std::vector<std::optional<Label>> best(n);
  std::vector<bool> settled(n, false);
  // Another route of the currently best length reaches v.
  std::vector<bool> tied(n, false);
  std::priority_queue<Label, std::vector<Label>, HeapOrder> heap;
  best[source] = Label{Rational(0), 0, kNoEdge, source};
  heap.push(*best[source]);

  while (!heap.empty()) {
    Label top = heap.top();
    heap.pop();
    const VertexId u = top.vertex;
    if (settled[u]) continue;
    if (better(*best[u], top)) continue;
    settled[u] = true;
    if (tied[u]) t.had_ties = true;
    t.order.push_back(u);
    t.dist[u] = top.dist;
    t.hops[u] = top.hops;
    t.parent_edge[u] = top.via;
    t.parent[u] = top.via == kNoEdge ? kNoVertex : g.other_end(top.via, u);

    for (EdgeId e : g.incident(u)) {
      const VertexId v = g.other_end(e, u);
      if (settled[v]) continue;
      Label cand{top.dist + g.edge(e).weight, top.hops + 1, e, v};
      if (!best[v]) {
        best[v] = cand;
        heap.push(cand);
        continue;
      }
      const int order = cmp(cand.dist, best[v]->dist);
      if (order == 0) tied[v] = true;
      if (order < 0) tied[v] = false;
      if (better(cand, *best[v])) {
        best[v] = cand;
        heap.push(std::move(cand));
      }
    }
  }

  for (VertexId v : t.order) {
    if (t.parent[v] != kNoVertex) t.children[t.parent[v]].push_back(v);
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    const VertexId v = *it;
    if (t.parent[v] == kNoVertex) continue;
    Rational through = g.edge(t.parent_edge[v]).weight + t.reach[v];
    if (through > t.reach[t.parent[v]]) t.reach[t.parent[v]] = through;
  }
  return t;
}

std::vector<ShortestPathTree> all_shortest_path_trees(const WeightedGraph& g) {
  std::vector<ShortestPathTree> trees;
  trees.reserve(g.vertex_count());
  for (VertexId s = 0; s < g.vertex_count(); ++s) trees.push_back(shortest_path_tree(g, s));
  return trees;
}

DistanceMatrix distance_matrix(std::span<const ShortestPathTree> trees) {
  std::vector<std::vector<std::optional<Rational>>> rows;
  rows.reserve(trees.size());
  for (const auto& t : trees) rows.push_back(t.dist);
  return DistanceMatrix(std::move(rows));
}

DistanceMatrix distance_matrix(const WeightedGraph& g) {
  auto trees = all_shortest_path_trees(g);
  return distance_matrix(trees);
}

std::optional<Rational> distance(const WeightedGraph& g, VertexId u, VertexId v) {
  if (v >= g.vertex_count()) throw InvalidInput("vertex out of range");
  return shortest_path_tree(g, u).dist[v];
}

std::vector<VertexId> ball(const WeightedGraph& g, VertexId u, const Rational& r) {
  if (r < 0) throw InvalidInput("ball radius must be non-negative");
  auto t = shortest_path_tree(g, u);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.dist[v] && *t.dist[v] <= r) out.push_back(v);
  }
  return out;
}

MetricCheck is_metric(const WeightedGraph& g) {
  if (!is_connected(g)) throw InvalidInput("metricity check requires a connected graph");
  auto dm = distance_matrix(g);
  MetricCheck result;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.weight != *dm(ed.u, ed.v)) {
      result.metric = false;
      result.witness = e;
      break;
    }
  }
  return result;
}

}  // namespace atlas
