#include <algorithm>
#include <bit>
#include <bitset>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "atlas/classic.hpp"
#include "atlas/deadline.hpp"
#include "atlas/error.hpp"
#include "mask_graph.hpp"

namespace atlas {

std::size_t Decomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w == 0 ? 0 : w - 1;
}

namespace {

using detail::MaskGraph;
using Bags = std::vector<std::vector<VertexId>>;

std::vector<VertexId> sorted_bag(std::vector<VertexId> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  return bag;
}

bool is_tree_component(const WeightedGraph& g, std::span<const VertexId> comp) {
  std::size_t degree_sum = 0;
  for (VertexId v : comp) degree_sum += g.degree(v);
  return degree_sum / 2 + 1 == comp.size();
}

// ---- pathwidth of trees ------------------------------------------------------

using TreeSet = std::bitset<128>;

class TreePathwidth {
 public:
  explicit TreePathwidth(const WeightedGraph& g) : g_(g) {}

  // Rooted label recursion. Uses: pw(T) >= k+1 iff some vertex has three
  // branches of pathwidth >= k. A vertex is k-critical in a rooted tree of
  // pathwidth k if two of its children root subtrees of pathwidth k; such a
  // vertex is unique. The label of a rooted tree lists its pathwidth and
  // critical vertex, then the label of the tree with the critical subtree cut
  // off, and so on.
  std::size_t value(const TreeSet& s) {
    if (s.count() <= 1) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::vector<VertexId> members = list(s);
    std::vector<VertexId> parent(g_.vertex_count(), kNoVertex);
    std::vector<VertexId> order{members.front()};
    parent[members.front()] = members.front();
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (EdgeId e : g_.incident(order[i])) {
        VertexId w = g_.other_end(e, order[i]);
        if (s[w] && parent[w] == kNoVertex) {
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    std::vector<Label> labels(g_.vertex_count());
    for (std::size_t i = order.size(); i-- > 0;) {
      check_deadline();
      VertexId v = order[i];
      std::vector<Cursor> children;
      for (EdgeId e : g_.incident(v)) {
        VertexId w = g_.other_end(e, v);
        if (s[w] && parent[w] == v) children.push_back({&labels[w], 0});
      }
      labels[v] = label_of(v, children);
    }
    std::size_t result = labels[members.front()].front().width;
    memo_.emplace(s, result);
    return result;
  }

  // Path decomposition of width value(s): a spine path whose removal leaves
  // pieces of smaller pathwidth, each piece decomposed recursively with its
  // spine attachment vertex added to every bag.
  Bags decompose(const TreeSet& s) {
    std::vector<VertexId> members = list(s);
    if (members.size() == 1) return {{members.front()}};
    const std::size_t k = value(s);
    // Extending a spine never hurts, so spines can run leaf to leaf.
    std::vector<VertexId> ends;
    for (VertexId v : members) {
      if (degree_in(s, v) <= 1) ends.push_back(v);
    }
    for (VertexId a : ends) {
      for (VertexId b : ends) {
        if (b < a) continue;
        std::vector<VertexId> spine = path(s, a, b);
        TreeSet spine_set;
        for (VertexId v : spine) spine_set.set(v);
        auto pieces = components(s, spine_set);
        bool ok = std::all_of(pieces.begin(), pieces.end(), [&](const TreeSet& p) { return value(p) + 1 <= k; });
        if (!ok) continue;
        Bags bags;
        for (std::size_t i = 0; i < spine.size(); ++i) {
          for (const TreeSet& piece : pieces) {
            if (!touches(piece, spine[i])) continue;
            for (auto bag : decompose(piece)) {
              bag.push_back(spine[i]);
              bags.push_back(sorted_bag(std::move(bag)));
            }
          }
          if (i + 1 < spine.size()) bags.push_back(sorted_bag({spine[i], spine[i + 1]}));
        }
        if (bags.empty()) bags.push_back({spine.front()});
        return bags;
      }
    }
    throw Error("tree pathwidth: no spine found");
  }

 private:
  TreeSet single(VertexId v) const {
    TreeSet t;
    t.set(v);
    return t;
  }

  std::vector<VertexId> list(const TreeSet& s) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (s[v]) out.push_back(v);
    }
    return out;
  }

  std::size_t degree_in(const TreeSet& s, VertexId v) const {
    std::size_t d = 0;
    for (EdgeId e : g_.incident(v)) d += s[g_.other_end(e, v)] ? 1 : 0;
    return d;
  }

  struct LabelEntry {
    std::size_t width;
    VertexId critical;
  };
  using Label = std::vector<LabelEntry>;
  // A child subtree with the first `offset` critical subtrees cut off.
  struct Cursor {
    const Label* label;
    std::size_t offset;

    const LabelEntry& head() const { return (*label)[offset]; }
  };

  // The cursors with cursor i advanced past its head; dropped when exhausted.
  static std::vector<Cursor> advance(std::vector<Cursor> cs, std::size_t i) {
    if (++cs[i].offset == cs[i].label->size()) cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
    return cs;
  }

  static std::size_t width_of(const std::vector<Cursor>& cs) {
    if (cs.empty()) return 0;
    std::vector<std::size_t> idx(cs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cs[a].head().width > cs[b].head().width; });
    const std::size_t h1 = cs[idx[0]].head().width;
    std::size_t best = std::max<std::size_t>(1, h1);
    if (cs.size() >= 3) best = std::max(best, cs[idx[2]].head().width + 1);
    if (cs.size() >= 2 && cs[idx[1]].head().width == h1) {
      for (const Cursor& c : cs) {
        if (c.head().width == h1 && c.head().critical != kNoVertex) best = std::max(best, h1 + 1);
      }
    } else if (cs[idx[0]].head().critical != kNoVertex && width_of(advance(cs, idx[0])) >= h1) {
      best = std::max(best, h1 + 1);
    }
    return best;
  }

  static Label label_of(VertexId v, const std::vector<Cursor>& cs) {
    const std::size_t k = width_of(cs);
    std::vector<std::size_t> at_k;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i].head().width == k) at_k.push_back(i);
    }
    if (at_k.size() >= 2) return {{k, v}};
    if (at_k.size() == 1 && cs[at_k[0]].head().critical != kNoVertex) {
      Label out{{k, cs[at_k[0]].head().critical}};
      Label rest = label_of(v, advance(cs, at_k[0]));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    return {{k, kNoVertex}};
  }

  bool touches(const TreeSet& piece, VertexId v) const {
    for (EdgeId e : g_.incident(v)) {
      if (piece[g_.other_end(e, v)]) return true;
    }
    return false;
  }

  std::vector<TreeSet> components(const TreeSet& s, const TreeSet& removed) const {
    TreeSet left = s & ~removed;
    std::vector<TreeSet> out;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!left[v]) continue;
      TreeSet comp;
      std::vector<VertexId> stack{v};
      comp.set(v);
      left.reset(v);
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g_.incident(x)) {
          VertexId y = g_.other_end(e, x);
          if (left[y]) {
            left.reset(y);
            comp.set(y);
            stack.push_back(y);
          }
        }
      }
      out.push_back(comp);
    }
    return out;
  }

  std::vector<VertexId> path(const TreeSet& s, VertexId a, VertexId b) const {
    std::vector<VertexId> parent(g_.vertex_count(), kNoVertex);
    std::vector<VertexId> queue{a};
    parent[a] = a;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (EdgeId e : g_.incident(queue[i])) {
        VertexId y = g_.other_end(e, queue[i]);
        if (s[y] && parent[y] == kNoVertex) {
          parent[y] = queue[i];
          queue.push_back(y);
        }
      }
    }
    std::vector<VertexId> out{b};
    while (out.back() != a) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  const WeightedGraph& g_;
  std::unordered_map<TreeSet, std::size_t> memo_;
};

// ---- pathwidth by vertex separation -------------------------------------------

std::size_t boundary(const MaskGraph& h, VertexMask s) {
  std::size_t count = 0;
  const VertexMask outside = h.all() & ~s;
  for (VertexMask f = s; f; f &= f - 1) {
    if (h.adj[static_cast<std::size_t>(std::countr_zero(f))] & outside) ++count;
  }
  return count;
}

VertexMask boundary_mask(const MaskGraph& h, VertexMask s) {
  VertexMask out = 0;
  const VertexMask outside = h.all() & ~s;
  for (VertexMask f = s; f; f &= f - 1) {
    auto v = static_cast<std::size_t>(std::countr_zero(f));
    if (h.adj[v] & outside) out |= bit(v);
  }
  return out;
}

Bags general_path_decomposition(const MaskGraph& h) {
  const std::size_t k = h.size();
  const std::size_t states = std::size_t{1} << k;
  std::vector<std::uint8_t> f(states, 0);
  for (std::size_t s = 1; s < states; ++s) {
    check_deadline();
    std::uint8_t best = 0xff;
    for (VertexMask r = s; r; r &= r - 1) {
      best = std::min(best, f[s & ~(r & (~r + 1))]);
    }
    f[s] = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(boundary(h, s)));
  }
  std::vector<VertexId> order(k);
  VertexMask s = h.all();
  for (std::size_t pos = k; pos-- > 0;) {
    VertexId pick = kNoVertex;
    for (VertexMask r = s; r; r &= r - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(r));
      if (pick == kNoVertex || f[s & ~bit(v)] < f[s & ~bit(pick)]) pick = v;
    }
    order[pos] = pick;
    s &= ~bit(pick);
  }
  Bags bags;
  VertexMask prefix = 0;
  for (VertexId v : order) {
    std::vector<VertexId> bag{h.vertices[v]};
    for (VertexMask b = boundary_mask(h, prefix); b; b &= b - 1) {
      bag.push_back(h.vertices[static_cast<std::size_t>(std::countr_zero(b))]);
    }
    bags.push_back(sorted_bag(std::move(bag)));
    prefix |= bit(v);
  }
  return bags;
}

// ---- treewidth by elimination orderings --------------------------------------

VertexMask neighbourhood(const MaskGraph& h, VertexMask s) {
  VertexMask out = 0;
  for (VertexMask f = s; f; f &= f - 1) out |= h.adj[static_cast<std::size_t>(std::countr_zero(f))];
  return out;
}

// Vertices outside s + v joined to v by a path with interior in s.
std::size_t q_size(const MaskGraph& h, VertexMask s, VertexId v) {
  VertexMask reach = detail::reach_within(h, v, s | bit(v));
  return static_cast<std::size_t>(std::popcount(neighbourhood(h, reach) & ~s & ~bit(v)));
}

std::size_t degeneracy(const MaskGraph& h) {
  VertexMask alive = h.all();
  std::size_t best = 0;
  while (alive) {
    VertexId pick = kNoVertex;
    int low = 0;
    for (VertexMask f = alive; f; f &= f - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(f));
      int d = std::popcount(h.adj[v] & alive);
      if (pick == kNoVertex || d < low) {
        pick = v;
        low = d;
      }
    }
    best = std::max(best, static_cast<std::size_t>(low));
    alive &= ~bit(pick);
  }
  return best;
}

// Greedy minimum-degree elimination on the filled graph.
std::pair<std::size_t, std::vector<VertexId>> min_degree_ordering(const MaskGraph& h) {
  std::vector<VertexMask> adj = h.adj;
  VertexMask alive = h.all();
  std::vector<VertexId> order;
  std::size_t width = 0;
  while (alive) {
    VertexId pick = kNoVertex;
    int low = 0;
    for (VertexMask f = alive; f; f &= f - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(f));
      int d = std::popcount(adj[v] & alive);
      if (pick == kNoVertex || d < low) {
        pick = v;
        low = d;
      }
    }
    width = std::max(width, static_cast<std::size_t>(low));
    VertexMask nb = adj[pick] & alive & ~bit(pick);
    for (VertexMask f = nb; f; f &= f - 1) adj[static_cast<std::size_t>(std::countr_zero(f))] |= nb & ~bit(static_cast<std::size_t>(std::countr_zero(f)));
    alive &= ~bit(pick);
    order.push_back(pick);
  }
  return {width, order};
}

std::vector<VertexId> exact_elimination_ordering(const MaskGraph& h) {
  const std::size_t k = h.size();
  const std::size_t states = std::size_t{1} << k;
  std::vector<std::uint8_t> tw(states, 0);
  for (std::size_t s = 1; s < states; ++s) {
    check_deadline();
    std::uint8_t best = 0xff;
    for (VertexMask r = s; r; r &= r - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(r));
      VertexMask rest = s & ~bit(v);
      if (tw[rest] >= best) continue;
      auto q = static_cast<std::uint8_t>(q_size(h, rest, v));
      best = std::min(best, std::max(tw[rest], q));
    }
    tw[s] = best;
  }
  std::vector<VertexId> order(k);
  VertexMask s = h.all();
  for (std::size_t pos = k; pos-- > 0;) {
    for (VertexMask r = s; r; r &= r - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(r));
      VertexMask rest = s & ~bit(v);
      if (std::max<std::size_t>(tw[rest], q_size(h, rest, v)) == tw[s]) {
        order[pos] = v;
        s = rest;
        break;
      }
    }
  }
  return order;
}

// Elimination order of a tree: reverse breadth-first order from its smallest vertex.
std::vector<VertexId> tree_elimination(const WeightedGraph& g, std::span<const VertexId> comp) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> queue{comp.front()};
  seen[comp.front()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (EdgeId e : g.incident(queue[i])) {
      VertexId y = g.other_end(e, queue[i]);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::reverse(queue.begin(), queue.end());
  return queue;
}

}  // namespace

WidthResult pathwidth(const WeightedGraph& g, const ClassicCaps& caps) {
  WidthResult result;
  result.decomposition.kind = DecompositionKind::path;
  auto comps = connected_components(g);
  for (const auto& comp : comps) {
    if (is_tree_component(g, comp)) {
      require_cap("pathwidth (forest)", g.vertex_count(), std::min<std::size_t>(caps.forest_pathwidth, 128));
    } else {
      require_cap("pathwidth", comp.size(), std::min(caps.pathwidth, kMaskUniverse));
    }
  }
  for (const auto& comp : comps) {
    Bags bags;
    if (is_tree_component(g, comp)) {
      TreeSet s;
      for (VertexId v : comp) s.set(v);
      bags = TreePathwidth(g).decompose(s);
    } else {
      bags = general_path_decomposition(detail::mask_graph(g, comp));
    }
    for (auto& b : bags) result.decomposition.bags.push_back(std::move(b));
  }
  result.value = result.decomposition.width();
  return result;
}

WidthResult treewidth(const WeightedGraph& g, const ClassicCaps& caps) {
  auto comps = connected_components(g);
  for (const auto& comp : comps) {
    if (!is_tree_component(g, comp)) require_cap("treewidth", comp.size(), std::min(caps.treewidth, kMaskUniverse));
  }
  std::vector<VertexId> order;
  for (const auto& comp : comps) {
    if (is_tree_component(g, comp)) {
      auto part = tree_elimination(g, comp);
      order.insert(order.end(), part.begin(), part.end());
      continue;
    }
    MaskGraph h = detail::mask_graph(g, comp);
    auto [upper, heuristic] = min_degree_ordering(h);
    std::vector<VertexId> local = upper <= degeneracy(h) ? heuristic : exact_elimination_ordering(h);
    for (VertexId v : local) order.push_back(h.vertices[v]);
  }
  WidthResult result;
  result.decomposition = decomposition_from_elimination(g, order);
  result.value = result.decomposition.width();
  return result;
}

Decomposition decomposition_from_elimination(const WeightedGraph& g, std::span<const VertexId> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw InvalidInput("elimination order must list every vertex once");
  std::vector<std::size_t> rank(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || rank[order[i]] != SIZE_MAX) throw InvalidInput("elimination order must list every vertex once");
    rank[order[i]] = i;
  }
  std::vector<std::set<VertexId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  Decomposition d;
  d.kind = DecompositionKind::tree;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = order[i];
    std::vector<VertexId> later;
    for (VertexId w : adj[v]) {
      if (rank[w] > i) later.push_back(w);
    }
    for (VertexId a : later) {
      for (VertexId b : later) {
        if (a != b) adj[a].insert(b);
      }
    }
    std::vector<VertexId> bag = later;
    bag.push_back(v);
    d.bags.push_back(sorted_bag(std::move(bag)));
    if (later.empty()) {
      if (!roots.empty()) d.tree_edges.emplace_back(roots.back(), i);
      roots.push_back(i);
    } else {
      VertexId next = *std::min_element(later.begin(), later.end(), [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
      d.tree_edges.emplace_back(i, rank[next]);
    }
  }
  return d;
}

DecompositionCheck check_decomposition(const WeightedGraph& g, const Decomposition& d) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = d.bags.size();
  DecompositionCheck c;
  for (const auto& bag : d.bags) {
    for (VertexId v : bag) {
      if (v >= n) return c;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges = d.tree_edges;
  if (d.kind == DecompositionKind::path) {
    c.shape = edges.empty();
    edges.clear();
    for (std::size_t i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  } else {
    c.shape = m == 0 ? n == 0 : edges.size() + 1 == m;
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : edges) {
      if (a >= m || b >= m || find(a) == find(b)) {
        c.shape = false;
        break;
      }
      parent[find(a)] = find(b);
    }
  }

  std::vector<std::vector<bool>> holds(m, std::vector<bool>(n, false));
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (VertexId v : d.bags[i]) {
      if (!holds[i][v]) ++count[v];
      holds[i][v] = true;
    }
  }
  c.covers_vertices = std::all_of(count.begin(), count.end(), [](std::size_t k) { return k > 0; });
  c.covers_edges = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    for (std::size_t i = 0; i < m; ++i) {
      if (holds[i][e.u] && holds[i][e.v]) return true;
    }
    return false;
  });
  // In a forest, the bags holding v are connected iff they span count-1 edges.
  std::vector<std::size_t> inner(n, 0);
  for (auto [a, b] : edges) {
    if (a >= m || b >= m) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (holds[a][v] && holds[b][v]) ++inner[v];
    }
  }
  c.connected_occurrences = true;
  for (VertexId v = 0; v < n; ++v) {
    if (count[v] > 0 && inner[v] + 1 != count[v]) c.connected_occurrences = false;
  }
  return c;
}

}  // namespace atlas
