#include "atlas/kcenter.hpp"

#include <algorithm>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"

namespace atlas {

namespace {

void require_valid(const DistanceMatrix& dist, std::size_t k) {
  const std::size_t n = dist.size();
  if (k < 1 || k > n) throw InvalidInput("k must lie between 1 and the vertex count");
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!dist.finite(u, v)) throw InvalidInput("k-center needs a connected graph");
    }
  }
}

}  // namespace

Rational covering_radius(const DistanceMatrix& dist, std::span<const VertexId> centers) {
  Rational radius = 0;
  for (VertexId v = 0; v < dist.size(); ++v) {
    std::optional<Rational> nearest;
    for (VertexId c : centers) {
      const auto& d = dist(v, c);
      if (d && (!nearest || *d < *nearest)) nearest = *d;
    }
    if (!nearest) throw InvalidInput("vertex unreachable from every center");
    radius = std::max(radius, *nearest);
  }
  return radius;
}

CenterSolution hochbaum_shmoys(const DistanceMatrix& dist, std::size_t k) {
  require_valid(dist, k);
  const std::size_t n = dist.size();
  std::vector<VertexId> centers{0};
  std::vector<Rational> nearest(n);
  for (VertexId v = 0; v < n; ++v) nearest[v] = *dist(v, 0);
  while (centers.size() < k) {
    VertexId far = 0;
    for (VertexId v = 1; v < n; ++v) {
      if (nearest[v] > nearest[far]) far = v;
    }
    centers.push_back(far);
    for (VertexId v = 0; v < n; ++v) nearest[v] = std::min(nearest[v], *dist(v, far));
  }
  CenterSolution s;
  s.radius = *std::max_element(nearest.begin(), nearest.end());
  std::sort(centers.begin(), centers.end());
  s.centers = std::move(centers);
  return s;
}

CenterSolution hochbaum_shmoys(const WeightedGraph& g, std::size_t k) { return hochbaum_shmoys(distance_matrix(g), k); }

CenterSolution exact_kcenter(const DistanceMatrix& dist, std::size_t k, std::size_t cap) {
  require_cap("exact k-center", dist.size(), cap);
  require_valid(dist, k);
  const std::size_t n = dist.size();
  CenterSolution best = hochbaum_shmoys(dist, k);
  bool improved_once = false;
  std::vector<VertexId> chosen(k);
  for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
  std::vector<Rational> scratch(n);
  while (true) {
    check_deadline();
    // Radius with early exit once it reaches the incumbent.
    Rational radius = 0;
    bool worse = false;
    for (VertexId v = 0; v < n && !worse; ++v) {
      Rational nearest = *dist(v, chosen[0]);
      for (std::size_t i = 1; i < k; ++i) nearest = std::min(nearest, *dist(v, chosen[i]));
      radius = std::max(radius, nearest);
      worse = improved_once ? radius >= best.radius : radius > best.radius;
    }
    if (!worse) {
      best.radius = radius;
      best.centers = chosen;
      improved_once = true;
    }
    std::size_t i = k;
    while (i > 0 && chosen[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return best;
}

CenterSolution exact_kcenter(const WeightedGraph& g, std::size_t k, std::size_t cap) {
  require_cap("exact k-center", g.vertex_count(), cap);
  return exact_kcenter(distance_matrix(g), k, cap);
}

}  // namespace atlas
