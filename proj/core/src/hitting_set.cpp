#include "atlas/hitting_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"

namespace atlas {

std::vector<VertexId> mask_to_vertices(VertexMask mask) {
  std::vector<VertexId> out;
  while (mask) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_to_mask(std::span<const VertexId> vertices) {
  VertexMask m = 0;
  for (VertexId v : vertices) {
    if (v >= kMaskUniverse) throw CapExceeded("vertex mask universe", v + 1, kMaskUniverse);
    m |= bit(v);
  }
  return m;
}

namespace {

// Drops duplicates and supersets; the survivors are sorted by size then value.
std::vector<VertexMask> minimal_sets(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> kept;
  for (VertexMask s : sets) {
    bool dominated = false;
    for (VertexMask k : kept) {
      if ((k & s) == k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

VertexMask greedy_solution(std::span<const VertexMask> family) {
  std::vector<VertexMask> open(family.begin(), family.end());
  VertexMask chosen = 0;
  while (!open.empty()) {
    VertexMask universe = 0;
    for (VertexMask s : open) universe |= s;
    VertexId best = 0;
    std::size_t best_hits = 0;
    for (VertexId v : mask_to_vertices(universe)) {
      std::size_t hits = 0;
      for (VertexMask s : open) hits += (s >> v) & 1U;
      if (hits > best_hits) {
        best_hits = hits;
        best = v;
      }
    }
    chosen |= bit(best);
    std::erase_if(open, [&](VertexMask s) { return (s & bit(best)) != 0; });
  }
  return chosen;
}

std::size_t packing(std::span<const VertexMask> sets, VertexMask forbidden) {
  // Sets are visited smallest-first so more of them fit.
  std::vector<VertexMask> live;
  live.reserve(sets.size());
  for (VertexMask s : sets) live.push_back(s & ~forbidden);
  std::sort(live.begin(), live.end(), [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b); });
  VertexMask used = 0;
  std::size_t count = 0;
  for (VertexMask s : live) {
    if ((s & used) == 0) {
      used |= s;
      ++count;
    }
  }
  return count;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(std::vector<VertexMask> sets) : sets_(std::move(sets)) {
    best_ = greedy_solution(sets_);
    best_size_ = static_cast<std::size_t>(std::popcount(best_));
  }

  VertexMask solve() {
    search(sets_, 0, 0);
    return best_;
  }

 private:
  void search(const std::vector<VertexMask>& open, VertexMask chosen, VertexMask forbidden) {
    check_deadline();
    const std::size_t depth = static_cast<std::size_t>(std::popcount(chosen));
    if (open.empty()) {
      if (depth < best_size_) {
        best_ = chosen;
        best_size_ = depth;
      }
      return;
    }
    // Only strictly smaller solutions are of interest.
    if (depth + 1 >= best_size_) return;
    if (depth + packing(open, forbidden) >= best_size_) return;

    VertexMask pivot = 0;
    int pivot_size = 65;
    for (VertexMask s : open) {
      int size = std::popcount(s & ~forbidden);
      if (size == 0) return;
      if (size < pivot_size) {
        pivot_size = size;
        pivot = s & ~forbidden;
      }
    }
    VertexMask banned = forbidden;
    for (VertexId v : mask_to_vertices(pivot)) {
      std::vector<VertexMask> rest;
      rest.reserve(open.size());
      for (VertexMask s : open) {
        if ((s & bit(v)) == 0) rest.push_back(s);
      }
      search(rest, chosen | bit(v), banned);
      banned |= bit(v);
    }
  }

  std::vector<VertexMask> sets_;
  VertexMask best_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

std::size_t greedy_hitting_upper_bound(std::span<const VertexMask> family) {
  return static_cast<std::size_t>(std::popcount(greedy_solution(family)));
}

std::size_t disjoint_packing_lower_bound(std::span<const VertexMask> family) { return packing(family, 0); }

VertexMask min_hitting_set(std::span<const VertexMask> family, VertexMask candidates, std::size_t cap) {
  require_cap("hitting-set family", family.size(), cap);
  std::vector<VertexMask> sets;
  sets.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    VertexMask s = family[i] & candidates;
    if (s == 0) {
      std::string members;
      for (VertexId v : mask_to_vertices(family[i])) members += (members.empty() ? "" : ",") + std::to_string(v);
      throw InvalidInput("hitting set infeasible: set " + std::to_string(i) + " {" + members +
                         "} contains no candidate");
    }
    sets.push_back(s);
  }
  if (sets.empty()) return 0;
  return BranchAndBound(minimal_sets(std::move(sets))).solve();
}

std::vector<VertexId> min_hitting_set(const HittingSetInstance& instance) {
  std::vector<VertexMask> family;
  family.reserve(instance.family.size());
  for (const auto& set : instance.family) {
    if (set.empty()) throw InvalidInput("hitting set family contains an empty set");
    family.push_back(vertices_to_mask(set));
  }
  VertexMask candidates = vertices_to_mask(instance.candidates);
  return mask_to_vertices(min_hitting_set(family, candidates, instance.cap.value_or(kDefaultHittingFamilyCap)));
}

std::vector<VertexId> min_vertex_cover(const WeightedGraph& g, std::size_t cap) {
  require_cap("minimum vertex cover", g.vertex_count(), std::min(cap, kMaskUniverse));
  std::vector<VertexMask> family;
  family.reserve(g.edge_count());
  for (const Edge& e : g.edges()) family.push_back(bit(e.u) | bit(e.v));
  VertexMask all = g.vertex_count() == 64 ? ~VertexMask{0} : (bit(g.vertex_count()) - 1);
  return mask_to_vertices(min_hitting_set(family, all, std::max<std::size_t>(family.size(), 1)));
}

}  // namespace atlas
