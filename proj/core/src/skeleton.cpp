#include "atlas/skeleton.hpp"

#include <algorithm>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"

namespace atlas {
namespace {

const Rational kTwoThirds(2, 3);

// Point identity on an interval at radius r (r within [lo, hi]): a vertex id,
// or vertex_count + edge id for a point strictly inside the edge.
std::size_t point_id(const SkeletonInterval& iv, const ShortestPathTree& spt, const Rational& r) {
  if (r == iv.lo) return iv.parent;
  if (r == *spt.dist[iv.child]) return iv.child;
  return spt.dist.size() + iv.edge;
}

std::size_t index_of(const std::vector<Rational>& sorted, const Rational& value) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

}  // namespace

std::vector<SkeletonInterval> skeleton_intervals(const ShortestPathTree& spt) {
  std::vector<SkeletonInterval> out;
  for (VertexId v : spt.order) {
    if (spt.parent[v] == kNoVertex) continue;
    const VertexId p = spt.parent[v];
    const Rational& dv = *spt.dist[v];
    Rational truncated = kTwoThirds * (dv + spt.reach[v]);
    Rational hi = truncated < dv ? truncated : dv;
    hi.canonicalize();
    if (*spt.dist[p] > hi) continue;
    out.push_back({spt.parent_edge[v], p, v, *spt.dist[p], std::move(hi)});
  }
  return out;
}

std::size_t cut_size(std::span<const SkeletonInterval> intervals, const ShortestPathTree& spt, const Rational& r) {
  std::vector<std::size_t> points;
  for (const auto& iv : intervals) {
    if (r < iv.lo || r > iv.hi) continue;
    points.push_back(point_id(iv, spt, r));
  }
  std::sort(points.begin(), points.end());
  return static_cast<std::size_t>(std::unique(points.begin(), points.end()) - points.begin());
}

CutProfile max_cut(std::span<const SkeletonInterval> intervals, const ShortestPathTree& spt) {
  CutProfile profile;
  profile.source = spt.source;
  profile.argmax_radius = 0;
  if (intervals.empty()) return profile;

  auto& bp = profile.breakpoints;
  bp.reserve(2 * intervals.size());
  for (const auto& iv : intervals) {
    bp.push_back(iv.lo);
    bp.push_back(iv.hi);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  const std::size_t k = bp.size();

  // segment[i]: intervals covering the open gap (bp[i], bp[i+1]).
  // interior[i]: intervals with bp[i] strictly inside them.
  std::vector<long> segment(k + 1, 0), interior(k + 1, 0);
  std::vector<std::vector<std::size_t>> boundary(k);
  for (const auto& iv : intervals) {
    const std::size_t a = index_of(bp, iv.lo);
    const std::size_t b = index_of(bp, iv.hi);
    if (a < b) {
      segment[a] += 1;
      segment[b] -= 1;
      if (a + 1 < b) {
        interior[a + 1] += 1;
        interior[b] -= 1;
      }
    }
    boundary[a].push_back(point_id(iv, spt, iv.lo));
    if (b != a) boundary[b].push_back(point_id(iv, spt, iv.hi));
  }

  long seg_running = 0, int_running = 0;
  bool first = true;
  auto consider = [&](std::size_t count, const Rational& radius) {
    if (first || count > profile.max_cut) {
      profile.max_cut = count;
      profile.argmax_radius = radius;
      first = false;
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    int_running += interior[i];
    auto& pts = boundary[i];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    consider(static_cast<std::size_t>(int_running) + pts.size(), bp[i]);
    seg_running += segment[i];
    if (i + 1 < k) consider(static_cast<std::size_t>(seg_running), midpoint(bp[i], bp[i + 1]));
  }
  return profile;
}

SkeletonResult skeleton_dimension(const WeightedGraph& g, std::span<const ShortestPathTree> trees) {
  SkeletonResult result;
  result.witness_radius = 0;
  for (const auto& spt : trees) {
    check_deadline();
    result.had_ties = result.had_ties || spt.had_ties;
    auto intervals = skeleton_intervals(spt);
    auto profile = max_cut(intervals, spt);
    if (result.witness_source == kNoVertex || profile.max_cut > result.kappa) {
      result.kappa = profile.max_cut;
      result.witness_source = spt.source;
      result.witness_radius = profile.argmax_radius;
    }
  }
  (void)g;
  return result;
}

SkeletonResult skeleton_dimension(const WeightedGraph& g) {
  auto trees = all_shortest_path_trees(g);
  return skeleton_dimension(g, trees);
}

std::size_t brute_force_skeleton_dimension(const WeightedGraph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  require_cap("brute-force skeleton dimension", n, cap);
  std::size_t best = 0;
  for (VertexId s = 0; s < n; ++s) {
    const auto spt = shortest_path_tree(g, s);
    // Farthest source distance among the descendants of v (v included),
    // found by walking each subtree explicitly.
    std::vector<Rational> far(n, Rational(0));
    for (VertexId v : spt.order) {
      Rational top = *spt.dist[v];
      std::vector<VertexId> stack{v};
      while (!stack.empty()) {
        VertexId w = stack.back();
        stack.pop_back();
        if (*spt.dist[w] > top) top = *spt.dist[w];
        for (VertexId c : spt.children[w]) stack.push_back(c);
      }
      far[v] = top;
    }
    std::vector<Rational> radii;
    for (VertexId v : spt.order) {
      radii.push_back(*spt.dist[v]);
      Rational cutoff = kTwoThirds * far[v];
      cutoff.canonicalize();
      radii.push_back(cutoff);
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    std::vector<Rational> probes = radii;
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) probes.push_back(midpoint(radii[i], radii[i + 1]));

    for (const Rational& r : probes) {
      check_deadline();
      std::vector<std::size_t> points;
      for (VertexId c : spt.order) {
        const VertexId p = spt.parent[c];
        if (p == kNoVertex) continue;
        const Rational& lo = *spt.dist[p];
        const Rational& hi = *spt.dist[c];
        if (r < lo || r > hi) continue;
        std::size_t id;
        const Rational* farthest;
        if (r == lo) {
          id = p;
          farthest = &far[p];
        } else if (r == hi) {
          id = c;
          farthest = &far[c];
        } else {
          id = n + spt.parent_edge[c];
          farthest = &far[c];
        }
        // Some descendant lies at least half as far from the point as the
        // point lies from the source.
        if (2 * (*farthest - r) >= r) points.push_back(id);
      }
      std::sort(points.begin(), points.end());
      std::size_t count = static_cast<std::size_t>(std::unique(points.begin(), points.end()) - points.begin());
      best = std::max(best, count);
    }
  }
  return best;
}

std::size_t skeleton_leaf_count(std::span<const SkeletonInterval> intervals, const ShortestPathTree& spt) {
  const std::size_t n = spt.dist.size();
  std::vector<std::size_t> open_children(n, 0);
  for (const auto& iv : intervals) {
    if (iv.lo < iv.hi) ++open_children[iv.parent];
  }
  std::size_t leaves = 0;
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) continue;
    if (iv.hi < *spt.dist[iv.child] || open_children[iv.child] == 0) ++leaves;
  }
  if (open_children[spt.source] == 1) ++leaves;
  return leaves;
}

}  // namespace atlas
