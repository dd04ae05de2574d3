#include "atlas/doubling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"
#include "atlas/hitting_set.hpp"

namespace atlas {

DoublingResult doubling_dimension(const DistanceMatrix& dist, std::size_t cap) {
  const std::size_t n = dist.size();
  require_cap("doubling dimension", n, std::min(cap, kMaskUniverse));
  DoublingResult result;
  if (n == 0) return result;
  result.center = 0;
  result.cover_centers = {0};

  std::vector<Rational> radii;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (dist.finite(u, v)) radii.push_back(*dist(u, v));
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  auto within = [&](VertexId a, VertexId b, const Rational& r) { return dist.finite(a, b) && *dist(a, b) <= r; };
  const VertexMask everyone = n >= kMaskUniverse ? ~VertexMask{0} : bit(n) - 1;

  for (VertexId u = 0; u < n; ++u) {
    for (const Rational& r : radii) {
      check_deadline();
      std::vector<VertexMask> family;
      for (VertexId p = 0; p < n; ++p) {
        if (!within(u, p, r)) continue;
        VertexMask coverers = 0;
        Rational half = r / 2;
        for (VertexId c = 0; c < n; ++c) {
          if (within(c, p, half)) coverers |= bit(c);
        }
        family.push_back(coverers);
      }
      if (family.size() <= result.constant) continue;
      if (greedy_hitting_upper_bound(family) <= result.constant) continue;
      VertexMask cover = min_hitting_set(family, everyone);
      auto size = static_cast<std::size_t>(std::popcount(cover));
      if (size > result.constant) {
        result.constant = size;
        result.center = u;
        result.radius = r;
        result.cover_centers = mask_to_vertices(cover);
      }
    }
  }
  result.dimension = std::log2(static_cast<double>(result.constant));
  return result;
}

DoublingResult doubling_dimension(const WeightedGraph& g, std::size_t cap) {
  require_cap("doubling dimension", g.vertex_count(), std::min(cap, kMaskUniverse));
  return doubling_dimension(distance_matrix(g), cap);
}

}  // namespace atlas
