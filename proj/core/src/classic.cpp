#include "atlas/classic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"
#include "mask_graph.hpp"

namespace atlas {

namespace detail {

MaskGraph mask_graph(const WeightedGraph& g, std::span<const VertexId> vertices) {
  MaskGraph h;
  h.vertices.assign(vertices.begin(), vertices.end());
  std::vector<VertexId> local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  h.adj.assign(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (EdgeId e : g.incident(vertices[i])) {
      VertexId w = local[g.other_end(e, vertices[i])];
      if (w != kNoVertex) h.adj[i] |= bit(w);
    }
  }
  return h;
}

std::vector<MaskGraph> component_mask_graphs(const WeightedGraph& g, const char* what, std::size_t cap) {
  auto comps = connected_components(g);
  std::size_t largest = 0;
  for (const auto& c : comps) largest = std::max(largest, c.size());
  require_cap(what, largest, std::min(cap, kMaskUniverse));
  std::vector<MaskGraph> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(mask_graph(g, c));
  return out;
}

VertexMask reach_within(const MaskGraph& h, VertexId start, VertexMask within) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= h.adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace detail

namespace {

using detail::MaskGraph;

EdgeId global_edge(const WeightedGraph& g, const MaskGraph& h, VertexId a, VertexId b) {
  return *g.find_edge(h.vertices[a], h.vertices[b]);
}

// ---- max leaf number -------------------------------------------------------

bool connected_dominating(const MaskGraph& h, VertexMask s) {
  VertexMask dominated = s;
  for (VertexMask f = s; f; f &= f - 1) dominated |= h.adj[static_cast<std::size_t>(std::countr_zero(f))];
  if (dominated != h.all()) return false;
  return detail::reach_within(h, static_cast<VertexId>(std::countr_zero(s)), s) == s;
}

// Minimum connected dominating set, smallest size first, then smallest mask.
VertexMask min_connected_dominating_set(const MaskGraph& h) {
  const std::size_t k = h.size();
  for (std::size_t size = 1; size <= k; ++size) {
    VertexMask s = bit(size) - 1;
    const VertexMask limit = h.all();
    while (true) {
      check_deadline();
      if (connected_dominating(h, s)) return s;
      VertexMask c = s & (~s + 1);
      VertexMask r = s + c;
      if (r == 0 || (r & ~limit)) break;
      s = (((r ^ s) >> 2) / c) | r;
      if (s & ~limit) break;
    }
  }
  return h.all();
}

std::size_t max_leaf_component(const WeightedGraph& g, const MaskGraph& h, std::vector<EdgeId>& edges) {
  const std::size_t k = h.size();
  if (k == 1) return 0;
  if (k == 2) {
    edges.push_back(global_edge(g, h, 0, 1));
    return 2;
  }
  VertexMask core = min_connected_dominating_set(h);
  std::vector<std::size_t> degree(k, 0);
  auto link = [&](VertexId a, VertexId b) {
    edges.push_back(global_edge(g, h, a, b));
    ++degree[a];
    ++degree[b];
  };
  // BFS tree of the dominating set, then every other vertex as a leaf.
  std::vector<VertexId> queue{static_cast<VertexId>(std::countr_zero(core))};
  VertexMask seen = bit(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId v = queue[i];
    for (VertexMask f = h.adj[v] & core & ~seen; f; f &= f - 1) {
      auto w = static_cast<VertexId>(std::countr_zero(f));
      seen |= bit(w);
      queue.push_back(w);
      link(v, w);
    }
  }
  for (VertexId v = 0; v < k; ++v) {
    if (!(core & bit(v))) link(static_cast<VertexId>(std::countr_zero(h.adj[v] & core)), v);
  }
  return static_cast<std::size_t>(std::count(degree.begin(), degree.end(), std::size_t{1}));
}

// ---- bandwidth ---------------------------------------------------------------

class BandwidthSearch {
 public:
  BandwidthSearch(const MaskGraph& h, std::size_t width) : h_(h), k_(width), n_(h.size()), pos_(n_, 0) {}

  bool run() {
    order_.clear();
    return place(1, 0);
  }
  const std::vector<std::size_t>& positions() const { return pos_; }

 private:
  std::size_t deadline(VertexId v) const {
    std::size_t d = SIZE_MAX;
    for (VertexMask f = h_.adj[v] & placed_; f; f &= f - 1) {
      d = std::min(d, pos_[static_cast<std::size_t>(std::countr_zero(f))] + k_);
    }
    return d;
  }

  std::string key(std::size_t p) const {
    std::string s(reinterpret_cast<const char*>(&placed_), sizeof placed_);
    std::size_t from = p > k_ + 1 ? p - k_ - 1 : 0;
    for (std::size_t i = from; i < order_.size(); ++i) s.push_back(static_cast<char>(order_[i]));
    return s;
  }

  bool place(std::size_t p, VertexMask placed) {
    placed_ = placed;
    if (p > n_) return true;
    check_deadline();
    std::vector<std::size_t> deadlines;
    VertexId forced = kNoVertex;
    for (VertexId v = 0; v < n_; ++v) {
      if (placed & bit(v)) continue;
      std::size_t d = deadline(v);
      if (d < p) return false;
      if (d == SIZE_MAX) continue;
      deadlines.push_back(d);
      if (d == p) {
        if (forced != kNoVertex) return false;
        forced = v;
      }
    }
    std::sort(deadlines.begin(), deadlines.end());
    for (std::size_t i = 0; i < deadlines.size(); ++i) {
      if (deadlines[i] < p + i) return false;
    }
    std::string memo = key(p);
    if (failed_.count(memo)) return false;

    auto attempt = [&](VertexId v) {
      pos_[v] = p;
      order_.push_back(v);
      if (place(p + 1, placed | bit(v))) return true;
      order_.pop_back();
      pos_[v] = 0;
      placed_ = placed;
      return false;
    };
    if (forced != kNoVertex) {
      if (attempt(forced)) return true;
    } else {
      for (VertexId v = 0; v < n_; ++v) {
        if (!(placed & bit(v)) && attempt(v)) return true;
      }
    }
    failed_.insert(std::move(memo));
    return false;
  }

  const MaskGraph& h_;
  std::size_t k_;
  std::size_t n_;
  std::vector<std::size_t> pos_;
  std::vector<VertexId> order_;
  VertexMask placed_ = 0;
  std::unordered_set<std::string> failed_;
};

std::size_t bandwidth_lower_bound(const MaskGraph& h) {
  std::size_t lb = 0;
  for (VertexId v = 0; v < h.size(); ++v) {
    lb = std::max<std::size_t>(lb, (static_cast<std::size_t>(std::popcount(h.adj[v])) + 1) / 2);
    VertexMask ball = bit(v);
    for (std::size_t d = 1;; ++d) {
      VertexMask grown = ball;
      for (VertexMask f = ball; f; f &= f - 1) grown |= h.adj[static_cast<std::size_t>(std::countr_zero(f))];
      if (grown == ball) break;
      ball = grown;
      std::size_t inside = static_cast<std::size_t>(std::popcount(ball)) - 1;
      lb = std::max(lb, (inside + 2 * d - 1) / (2 * d));
    }
  }
  return lb;
}

// ---- distance to linear forest ------------------------------------------------

class LinearForestSearch {
 public:
  explicit LinearForestSearch(const MaskGraph& h) : h_(h) {}

  std::vector<VertexId> solve() {
    for (std::size_t budget = 0;; ++budget) {
      deleted_.clear();
      if (search(h_.all(), budget)) return deleted_;
    }
  }

 private:
  bool search(VertexMask alive, std::size_t budget) {
    check_deadline();
    for (VertexMask f = alive; f; f &= f - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(f));
      VertexMask nb = h_.adj[v] & alive;
      if (std::popcount(nb) < 3) continue;
      if (budget == 0) return false;
      std::vector<VertexId> branch{v};
      for (VertexMask m = nb; m && branch.size() < 4; m &= m - 1) {
        branch.push_back(static_cast<VertexId>(std::countr_zero(m)));
      }
      for (VertexId x : branch) {
        deleted_.push_back(x);
        if (search(alive & ~bit(x), budget - 1)) return true;
        deleted_.pop_back();
      }
      return false;
    }
    // Maximum degree is at most two: every cycle needs one deletion.
    std::vector<VertexId> cycles;
    VertexMask left = alive;
    while (left) {
      auto v = static_cast<VertexId>(std::countr_zero(left));
      VertexMask comp = detail::reach_within(h_, v, alive);
      left &= ~comp;
      bool cycle = std::popcount(comp) >= 3;
      for (VertexMask f = comp; f && cycle; f &= f - 1) {
        cycle = std::popcount(h_.adj[static_cast<std::size_t>(std::countr_zero(f))] & alive) == 2;
      }
      if (cycle) cycles.push_back(v);
    }
    if (cycles.size() > budget) return false;
    deleted_.insert(deleted_.end(), cycles.begin(), cycles.end());
    return true;
  }

  const MaskGraph& h_;
  std::vector<VertexId> deleted_;
};

// Union-find over vertex ids.
struct Components {
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  VertexId find(VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<VertexId> parent;
};

}  // namespace

MaxLeafResult max_leaf_number(const WeightedGraph& g, const ClassicCaps& caps) {
  MaxLeafResult result;
  for (const MaskGraph& h : detail::component_mask_graphs(g, "max leaf number", caps.max_leaf)) {
    result.value = std::max(result.value, max_leaf_component(g, h, result.tree_edges));
  }
  std::sort(result.tree_edges.begin(), result.tree_edges.end());
  return result;
}

BandwidthResult bandwidth(const WeightedGraph& g, const ClassicCaps& caps) {
  BandwidthResult result;
  result.labeling.position.assign(g.vertex_count(), 0);
  std::size_t offset = 0;
  for (const MaskGraph& h : detail::component_mask_graphs(g, "bandwidth", caps.bandwidth)) {
    std::size_t width = bandwidth_lower_bound(h);
    while (true) {
      BandwidthSearch search(h, width);
      if (search.run()) {
        for (VertexId v = 0; v < h.size(); ++v) result.labeling.position[h.vertices[v]] = offset + search.positions()[v];
        break;
      }
      ++width;
    }
    result.value = std::max(result.value, width);
    offset += h.size();
  }
  return result;
}

LinearForestResult distance_to_linear_forest(const WeightedGraph& g, const ClassicCaps& caps) {
  LinearForestResult result;
  for (const MaskGraph& h : detail::component_mask_graphs(g, "distance to linear forest", caps.linear_forest)) {
    for (VertexId v : LinearForestSearch(h).solve()) result.deleted.push_back(h.vertices[v]);
  }
  std::sort(result.deleted.begin(), result.deleted.end());
  result.value = result.deleted.size();
  return result;
}

std::size_t h_index(const WeightedGraph& g) {
  std::vector<std::size_t> degrees;
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  std::size_t h = 0;
  while (h < degrees.size() && degrees[h] >= h + 1) ++h;
  return h;
}

DegreeStats degree_stats(const WeightedGraph& g) {
  DegreeStats s;
  if (g.vertex_count() == 0) return s;
  s.min = SIZE_MAX;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    s.min = std::min(s.min, g.degree(v));
    s.max = std::max(s.max, g.degree(v));
  }
  return s;
}

bool is_bijective(const Labeling& labeling, std::size_t n) {
  if (labeling.position.size() != n) return false;
  std::vector<bool> used(n + 1, false);
  for (std::size_t p : labeling.position) {
    if (p < 1 || p > n || used[p]) return false;
    used[p] = true;
  }
  return true;
}

std::size_t labeling_bandwidth(const WeightedGraph& g, const Labeling& labeling) {
  std::size_t bw = 0;
  for (const Edge& e : g.edges()) {
    std::size_t a = labeling.position.at(e.u);
    std::size_t b = labeling.position.at(e.v);
    bw = std::max(bw, a > b ? a - b : b - a);
  }
  return bw;
}

bool is_spanning_forest(const WeightedGraph& g, std::span<const EdgeId> edges) {
  Components forest(g.vertex_count());
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) return false;
    if (!forest.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return edges.size() + connected_components(g).size() == g.vertex_count();
}

std::size_t max_leaves_in_forest(const WeightedGraph& g, std::span<const EdgeId> edges) {
  Components forest(g.vertex_count());
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    forest.unite(ed.u, ed.v);
    ++degree[ed.u];
    ++degree[ed.v];
  }
  std::vector<std::size_t> leaves(g.vertex_count(), 0);
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] == 1) best = std::max(best, ++leaves[forest.find(v)]);
  }
  return best;
}

bool is_linear_forest_after(const WeightedGraph& g, std::span<const VertexId> deleted) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (VertexId v : deleted) {
    if (v >= g.vertex_count()) return false;
    gone[v] = true;
  }
  Components forest(g.vertex_count());
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    if (++degree[e.u] > 2 || ++degree[e.v] > 2) return false;
    if (!forest.unite(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace atlas
