#include "atlas/highway.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(HighwayDefinition def) {
  switch (def) {
    case HighwayDefinition::hd1:
      return "hd1";
    case HighwayDefinition::hd2:
      return "hd2";
    case HighwayDefinition::hd3:
      return "hd3";
  }
  return "hd?";
}

HighwayDefinition parse_highway_definition(std::string_view text) {
  if (text == "hd1") return HighwayDefinition::hd1;
  if (text == "hd2") return HighwayDefinition::hd2;
  if (text == "hd3") return HighwayDefinition::hd3;
  throw InvalidInput("unknown highway definition '" + std::string(text) + "'");
}

ShortestPathCatalog::ShortestPathCatalog(WeightedGraph g, std::size_t cap) : graph_(std::move(g)) {
  const std::size_t n = graph_.vertex_count();
  require_cap("shortest-path catalog", n, std::min(cap, kMaskUniverse));
  trees_ = all_shortest_path_trees(graph_);
  distances_ = distance_matrix(trees_);
  pair_index_.assign(n, std::vector<std::optional<std::size_t>>(n));

  std::map<std::vector<VertexId>, std::size_t> seen;
  for (VertexId s = 0; s < n; ++s) {
    had_ties_ = had_ties_ || trees_[s].had_ties;
    for (VertexId t = 0; t < n; ++t) {
      if (!trees_[s].reachable(t)) continue;
      PathRecord rec = trees_[s].path_to(t);
      std::vector<VertexId> key = rec.vertices;
      std::vector<VertexId> reversed(key.rbegin(), key.rend());
      key = std::min(key, reversed);
      auto [it, inserted] = seen.emplace(key, paths_.size());
      if (inserted) {
        CatalogPath path;
        path.mask = vertices_to_mask(rec.vertices);
        path.vertices = std::move(rec.vertices);
        path.length = std::move(rec.length);
        paths_.push_back(std::move(path));
      }
      pair_index_[s][t] = it->second;
    }
  }
}

namespace {

// Neighbours w of `end` with w + |path| equal to dist(w, other).
std::vector<std::pair<VertexId, Rational>> one_sided(const ShortestPathCatalog& catalog, const CatalogPath& path,
                                                     VertexId end, VertexId other) {
  const WeightedGraph& g = catalog.graph();
  const DistanceMatrix& dist = catalog.distances();
  std::vector<std::pair<VertexId, Rational>> out;
  for (EdgeId e : g.incident(end)) {
    VertexId w = g.other_end(e, end);
    const auto& d = dist(w, other);
    if (d && *d == g.edge(e).weight + path.length) out.emplace_back(w, g.edge(e).weight);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<VertexId> extension_vertices(const CatalogPath& path, const PathExtension& ext) {
  std::vector<VertexId> out;
  out.reserve(path.vertices.size() + 2);
  if (ext.left != kNoVertex) out.push_back(ext.left);
  out.insert(out.end(), path.vertices.begin(), path.vertices.end());
  if (ext.right != kNoVertex) out.push_back(ext.right);
  return out;
}

// Distances from `anchor` to the nearest and farthest vertex of `vertices`;
// nullopt entries when none (resp. not all) are reachable.
struct Span {
  std::optional<Rational> nearest;
  std::optional<Rational> farthest;
};

Span anchor_span(const DistanceMatrix& dist, VertexId anchor, std::span<const VertexId> vertices) {
  Span s;
  bool all = true;
  for (VertexId v : vertices) {
    const auto& d = dist(anchor, v);
    if (!d) {
      all = false;
      continue;
    }
    if (!s.nearest || *d < *s.nearest) s.nearest = *d;
    if (!s.farthest || *d > *s.farthest) s.farthest = *d;
  }
  if (!all) s.farthest.reset();
  return s;
}

struct Interval {
  std::size_t path;
  Rational lo;
  Rational hi;
};

// The radii r at which each path belongs to the family form a union of
// half-open intervals [lo, hi); `critical` collects every endpoint candidate.
void anchor_intervals(const ShortestPathCatalog& catalog, VertexId anchor, HighwayDefinition def,
                      std::vector<Interval>* intervals, std::vector<Rational>* critical) {
  const DistanceMatrix& dist = catalog.distances();
  auto paths = catalog.paths();
  auto emit = [&](std::size_t idx, const Rational& lo, const Rational& hi) {
    if (intervals && lo < hi) intervals->push_back({idx, lo, hi});
  };
  auto note = [&](const Rational& value) {
    if (critical && value > 0) critical->push_back(value);
  };
  for (std::size_t idx = 0; idx < paths.size(); ++idx) {
    check_deadline();
    const CatalogPath& p = paths[idx];
    if (def == HighwayDefinition::hd3) {
      for (const PathExtension& ext : path_extensions(catalog, idx)) {
        std::vector<VertexId> vs = extension_vertices(p, ext);
        Span s = anchor_span(dist, anchor, vs);
        if (!s.nearest) continue;
        Rational lo = *s.nearest / 2;
        note(ext.length);
        note(lo);
        emit(idx, lo, ext.length);
      }
      continue;
    }
    if (p.single_vertex()) continue;
    Span s = anchor_span(dist, anchor, p.vertices);
    if (def == HighwayDefinition::hd1) {
      if (!s.farthest) continue;
      Rational lo = *s.farthest / 4;
      note(p.length);
      note(lo);
      emit(idx, lo, p.length);
    } else {
      if (!s.nearest) continue;
      Rational half = p.length / 2;
      Rational near = *s.nearest / 2;
      note(p.length);
      note(half);
      note(near);
      emit(idx, std::max(half, near), p.length);
    }
  }
}

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

VertexMask all_vertices(std::size_t n) { return n >= kMaskUniverse ? ~VertexMask{0} : (bit(n) - 1); }

VertexMask candidate_mask(const ShortestPathCatalog& catalog, VertexId anchor, const Rational& r,
                          HighwayDefinition def) {
  const std::size_t n = catalog.graph().vertex_count();
  if (def != HighwayDefinition::hd1) return all_vertices(n);
  VertexMask mask = 0;
  Rational limit = 4 * r;
  for (VertexId v = 0; v < n; ++v) {
    const auto& d = catalog.distances()(anchor, v);
    if (d && *d <= limit) mask |= bit(v);
  }
  return mask;
}

}  // namespace

std::vector<PathExtension> path_extensions(const ShortestPathCatalog& catalog, std::size_t path_index) {
  const CatalogPath& p = catalog.paths()[path_index];
  const DistanceMatrix& dist = catalog.distances();
  const VertexId a = p.vertices.front();
  const VertexId b = p.vertices.back();
  std::vector<PathExtension> out;
  out.push_back({kNoVertex, kNoVertex, p.length});

  auto left = one_sided(catalog, p, a, b);
  for (const auto& [w, len] : left) out.push_back({w, kNoVertex, len + p.length});
  if (p.single_vertex()) {
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = i + 1; j < left.size(); ++j) {
        Rational total = left[i].second + left[j].second;
        const auto& d = dist(left[i].first, left[j].first);
        if (d && *d == total) out.push_back({left[i].first, left[j].first, total});
      }
    }
    return out;
  }
  auto right = one_sided(catalog, p, b, a);
  for (const auto& [w, len] : right) out.push_back({kNoVertex, w, p.length + len});
  for (const auto& [w0, l0] : left) {
    for (const auto& [w1, l1] : right) {
      Rational total = l0 + p.length + l1;
      const auto& d = dist(w0, w1);
      if (d && *d == total) out.push_back({w0, w1, total});
    }
  }
  return out;
}

std::optional<PathRecord> r_witness(const ShortestPathCatalog& catalog, std::size_t path_index, const Rational& r) {
  const CatalogPath& p = catalog.paths()[path_index];
  for (const PathExtension& ext : path_extensions(catalog, path_index)) {
    if (ext.length > r) return PathRecord{extension_vertices(p, ext), ext.length};
  }
  return std::nullopt;
}

std::vector<std::size_t> paths_to_hit(const ShortestPathCatalog& catalog, VertexId anchor, const Rational& r,
                                      HighwayDefinition def) {
  const DistanceMatrix& dist = catalog.distances();
  auto paths = catalog.paths();
  if (anchor >= catalog.graph().vertex_count()) throw InvalidInput("anchor out of range");
  auto within = [&](VertexId v, const Rational& radius) {
    const auto& d = dist(anchor, v);
    return d && *d <= radius;
  };
  const Rational r2 = 2 * r;
  const Rational r4 = 4 * r;
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < paths.size(); ++idx) {
    const CatalogPath& p = paths[idx];
    bool take = false;
    switch (def) {
      case HighwayDefinition::hd1:
        take = !p.single_vertex() && p.length > r &&
               std::all_of(p.vertices.begin(), p.vertices.end(), [&](VertexId v) { return within(v, r4); });
        break;
      case HighwayDefinition::hd2:
        take = !p.single_vertex() && p.length > r && p.length <= r2 &&
               std::any_of(p.vertices.begin(), p.vertices.end(), [&](VertexId v) { return within(v, r2); });
        break;
      case HighwayDefinition::hd3:
        for (const PathExtension& ext : path_extensions(catalog, idx)) {
          if (ext.length <= r) continue;
          std::vector<VertexId> vs = extension_vertices(p, ext);
          if (std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return within(v, r2); })) {
            take = true;
            break;
          }
        }
        break;
    }
    if (take) out.push_back(idx);
  }
  return out;
}

std::vector<Rational> critical_radii(const ShortestPathCatalog& catalog, VertexId anchor, HighwayDefinition def) {
  std::vector<Rational> critical;
  anchor_intervals(catalog, anchor, def, nullptr, &critical);
  sort_unique(critical);
  return critical;
}

std::vector<Rational> evaluation_radii(std::span<const Rational> critical) {
  std::vector<Rational> out;
  if (critical.empty()) return out;
  out.reserve(2 * critical.size());
  out.push_back(critical.front() / 2);
  for (std::size_t i = 0; i < critical.size(); ++i) {
    if (i > 0) out.push_back(midpoint(critical[i - 1], critical[i]));
    out.push_back(critical[i]);
  }
  return out;
}

HighwayWitness anchored_highway(const ShortestPathCatalog& catalog, VertexId anchor, const Rational& r,
                                HighwayDefinition def) {
  if (r <= 0) throw InvalidInput("radius must be positive");
  std::vector<std::size_t> family = paths_to_hit(catalog, anchor, r, def);
  std::vector<VertexMask> masks;
  masks.reserve(family.size());
  for (std::size_t idx : family) masks.push_back(catalog.paths()[idx].mask);
  VertexMask solution = min_hitting_set(masks, candidate_mask(catalog, anchor, r, def));
  HighwayWitness w;
  w.definition = def;
  w.hitting_set = mask_to_vertices(solution);
  w.value = w.hitting_set.size();
  w.anchor = anchor;
  w.radius = r;
  w.had_ties = catalog.had_ties();
  return w;
}

HighwayWitness highway_dimension(const ShortestPathCatalog& catalog, HighwayDefinition def, const HighwayCaps& caps) {
  const std::size_t n = catalog.graph().vertex_count();
  const std::size_t cap = def == HighwayDefinition::hd1   ? caps.hd1
                          : def == HighwayDefinition::hd2 ? caps.hd2
                                                          : caps.hd3;
  require_cap(def == HighwayDefinition::hd1   ? "hd1"
              : def == HighwayDefinition::hd2 ? "hd2"
                                              : "hd3",
              n, cap);

  HighwayWitness best;
  best.definition = def;
  best.had_ties = catalog.had_ties();
  if (n > 0) best.anchor = 0;
  auto paths = catalog.paths();

  for (VertexId u = 0; u < n; ++u) {
    std::vector<Interval> intervals;
    std::vector<Rational> critical;
    anchor_intervals(catalog, u, def, &intervals, &critical);
    sort_unique(critical);
    std::vector<Rational> radii = evaluation_radii(critical);
    if (radii.empty()) continue;

    // Per evaluation index, paths entering and leaving the family.
    std::vector<std::vector<std::size_t>> enter(radii.size() + 1);
    std::vector<std::vector<std::size_t>> leave(radii.size() + 1);
    for (const Interval& iv : intervals) {
      auto lo = static_cast<std::size_t>(std::lower_bound(radii.begin(), radii.end(), iv.lo) - radii.begin());
      auto hi = static_cast<std::size_t>(std::lower_bound(radii.begin(), radii.end(), iv.hi) - radii.begin());
      if (lo >= hi) continue;
      enter[lo].push_back(iv.path);
      leave[hi].push_back(iv.path);
    }

    std::vector<std::size_t> cover(paths.size(), 0);
    bool dirty = false;
    std::vector<VertexMask> family;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      check_deadline();
      for (std::size_t idx : leave[k]) dirty = (--cover[idx] == 0) || dirty;
      for (std::size_t idx : enter[k]) dirty = (cover[idx]++ == 0) || dirty;
      if (!dirty) continue;
      dirty = false;

      family.clear();
      for (std::size_t idx = 0; idx < paths.size(); ++idx) {
        if (cover[idx] > 0) family.push_back(paths[idx].mask);
      }
      if (family.size() <= best.value) continue;
      VertexMask candidates = candidate_mask(catalog, u, radii[k], def);
      for (VertexMask& m : family) m &= candidates;
      if (greedy_hitting_upper_bound(family) <= best.value) continue;
      VertexMask solution = min_hitting_set(family, candidates, caps.hitting_family);
      std::size_t value = static_cast<std::size_t>(std::popcount(solution));
      if (value > best.value) {
        best.value = value;
        best.anchor = u;
        best.radius = radii[k];
        best.hitting_set = mask_to_vertices(solution);
      }
    }
  }
  return best;
}

HighwayWitness highway_dimension(const WeightedGraph& g, HighwayDefinition def, const HighwayCaps& caps) {
  return highway_dimension(ShortestPathCatalog(g, caps.catalog), def, caps);
}

}  // namespace atlas
