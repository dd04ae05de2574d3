#include "atlas/embedding.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"

namespace atlas {

FiniteMetric::FiniteMetric(std::vector<std::vector<Rational>> dist) : dist_(std::move(dist)) {
  const std::size_t n = dist_.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (dist_[u].size() != n) throw InvalidInput("metric matrix is not square");
    if (dist_[u][u] != 0) throw InvalidInput("metric diagonal must be zero");
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (dist_[u][v] <= 0) throw InvalidInput("metric distances must be positive");
      if (dist_[u][v] != dist_[v][u]) throw InvalidInput("metric matrix is not symmetric");
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    check_deadline();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (dist_[u][v] > dist_[u][w] + dist_[w][v]) {
          throw InvalidInput("triangle inequality fails for points " + std::to_string(u) + ", " + std::to_string(w) +
                             ", " + std::to_string(v));
        }
      }
    }
  }
}

FiniteMetric FiniteMetric::from_graph(const WeightedGraph& g) {
  DistanceMatrix d = distance_matrix(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!d.finite(u, v)) throw InvalidInput("graph metric needs a connected graph");
      rows[u][v] = *d(u, v);
    }
  }
  return FiniteMetric(std::move(rows));
}

DistanceMatrix FiniteMetric::distances() const {
  std::vector<std::vector<std::optional<Rational>>> rows(size());
  for (std::size_t u = 0; u < size(); ++u) rows[u].assign(dist_[u].begin(), dist_[u].end());
  return DistanceMatrix(std::move(rows));
}

FiniteMetric read_metric(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw InvalidInput("metric file is empty");
  long n = 0;
  try {
    n = std::stol(token);
  } catch (const std::exception&) {
    throw InvalidInput("metric file must start with the point count");
  }
  if (n < 0) throw InvalidInput("negative point count");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (auto& row : rows) {
    for (auto& cell : row) {
      if (!(in >> token)) throw InvalidInput("metric file ends early");
      cell = parse_rational(token);
    }
  }
  if (in >> token) throw InvalidInput("trailing data in metric file");
  return FiniteMetric(std::move(rows));
}

FiniteMetric read_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_metric(in);
}

void write_metric(std::ostream& out, const FiniteMetric& metric) {
  out << metric.size() << '\n';
  for (std::size_t u = 0; u < metric.size(); ++u) {
    for (std::size_t v = 0; v < metric.size(); ++v) out << (v ? " " : "") << to_string(metric(u, v));
    out << '\n';
  }
}

Rational min_distance(const FiniteMetric& x) {
  if (x.size() < 2) throw InvalidInput("metric needs at least two points");
  Rational best = x(0, 1);
  for (std::size_t u = 0; u < x.size(); ++u) {
    for (std::size_t v = u + 1; v < x.size(); ++v) best = std::min(best, x(u, v));
  }
  return best;
}

Rational max_distance(const FiniteMetric& x) {
  if (x.size() < 2) throw InvalidInput("metric needs at least two points");
  Rational best = x(0, 1);
  for (std::size_t u = 0; u < x.size(); ++u) {
    for (std::size_t v = u + 1; v < x.size(); ++v) best = std::max(best, x(u, v));
  }
  return best;
}

Rational aspect_ratio(const FiniteMetric& x) { return max_distance(x) / min_distance(x); }

Rational HubHierarchy::covering_radius(long level) const {
  Rational one_plus = 1 + epsilon;
  return epsilon * power(Rational(2), level - 2) / (one_plus * one_plus * static_cast<long>(effective_levels()));
}

bool HubHierarchy::contains(std::size_t level, std::size_t point) const {
  if (level >= hubs.size()) return false;
  return std::binary_search(hubs[level].begin(), hubs[level].end(), point);
}

namespace {

void require_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw InvalidInput("epsilon must lie strictly between 0 and 1");
}

// Smallest L with 2^L >= ratio.
std::size_t ceil_log2(const Rational& ratio) {
  std::size_t l = 0;
  Rational p = 1;
  while (p < ratio) {
    p *= 2;
    ++l;
  }
  return l;
}

}  // namespace

HubHierarchy build_hub_hierarchy(const FiniteMetric& x, const Rational& epsilon) {
  require_epsilon(epsilon);
  HubHierarchy h;
  h.epsilon = epsilon;
  h.scale = min_distance(x);
  h.levels = ceil_log2(aspect_ratio(x));
  const std::size_t n = x.size();
  h.hubs.assign(h.levels + 1, {});
  std::vector<std::size_t> admitted;
  for (std::size_t level = h.levels + 1; level-- > 0;) {
    const Rational radius = h.covering_radius(static_cast<long>(level)) * h.scale;
    for (std::size_t p = 0; p < n; ++p) {
      bool covered = std::any_of(admitted.begin(), admitted.end(), [&](std::size_t a) { return x(a, p) <= radius; });
      if (!covered) admitted.push_back(p);
    }
    h.hubs[level] = admitted;
    std::sort(h.hubs[level].begin(), h.hubs[level].end());
  }
  return h;
}

HierarchyCheck check_hub_hierarchy(const FiniteMetric& x, const HubHierarchy& h) {
  HierarchyCheck c;
  const std::size_t n = x.size();
  c.base = !h.hubs.empty() && h.hubs[0].size() == n;
  c.nesting = true;
  for (std::size_t i = 0; i + 1 < h.hubs.size(); ++i) {
    for (std::size_t p : h.hubs[i + 1]) c.nesting = c.nesting && h.contains(i, p);
  }
  c.covering = true;
  c.separation = true;
  for (std::size_t i = 0; i < h.hubs.size(); ++i) {
    const Rational radius = h.covering_radius(static_cast<long>(i)) * h.scale;
    const Rational gap = radius / 2;
    for (std::size_t p = 0; p < n; ++p) {
      bool covered = std::any_of(h.hubs[i].begin(), h.hubs[i].end(), [&](std::size_t a) { return x(a, p) <= radius; });
      c.covering = c.covering && covered;
    }
    for (std::size_t a = 0; a < h.hubs[i].size(); ++a) {
      for (std::size_t b = a + 1; b < h.hubs[i].size(); ++b) {
        c.separation = c.separation && x(h.hubs[i][a], h.hubs[i][b]) > gap;
      }
    }
  }
  return c;
}

EmbeddedGraph build_embedded_graph(const FiniteMetric& x, const Rational& epsilon) {
  EmbeddedGraph out;
  out.hierarchy = build_hub_hierarchy(x, epsilon);
  const HubHierarchy& h = out.hierarchy;
  const std::size_t n = x.size();
  const auto big_l = static_cast<long>(h.levels);
  std::vector<Edge> kept;
  std::vector<Edge> all;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      check_deadline();
      std::size_t level = 0;
      while (level + 1 <= h.levels && h.contains(level + 1, u) && h.contains(level + 1, v)) ++level;
      Rational factor = 1;
      if (big_l > 0) factor = 1 + epsilon * (1 - Rational(static_cast<long>(level)) / big_l);
      Edge e{u, v, factor * x(u, v)};
      all.push_back(e);
      Rational rescaled = x(u, v) / h.scale;
      if (rescaled > power(Rational(2), static_cast<long>(level) + 1)) continue;
      kept.push_back(e);
      out.edge_level.push_back(level);
    }
  }
  out.graph = WeightedGraph(n, std::move(kept));
  out.unpruned = WeightedGraph(n, std::move(all));
  return out;
}

DistortionReport verify_distortion(const FiniteMetric& x, const WeightedGraph& g, const Rational& epsilon) {
  if (g.vertex_count() != x.size()) throw InvalidInput("graph and metric sizes differ");
  DistortionReport r;
  DistanceMatrix d = distance_matrix(g);
  bool first = true;
  for (std::size_t u = 0; u < x.size(); ++u) {
    for (std::size_t v = u + 1; v < x.size(); ++v) {
      if (!d.finite(u, v)) {
        r.within_bounds = false;
        r.worst_pair = {u, v};
        continue;
      }
      Rational stretch = *d(u, v) / x(u, v);
      if (first || stretch < r.min_stretch) r.min_stretch = stretch;
      if (first || stretch > r.max_stretch) {
        r.max_stretch = stretch;
        r.worst_pair = {u, v};
      }
      first = false;
      if (stretch < 1 || stretch > 1 + epsilon) r.within_bounds = false;
    }
  }
  if (first) {
    r.min_stretch = 1;
    r.max_stretch = 1;
  }
  return r;
}

bool pruning_preserves_distances(const EmbeddedGraph& e) {
  DistanceMatrix a = distance_matrix(e.graph);
  DistanceMatrix b = distance_matrix(e.unpruned);
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (a(u, v) != b(u, v)) return false;
    }
  }
  return true;
}

std::optional<EdgeId> long_edge_violation(const EmbeddedGraph& e) {
  const HubHierarchy& h = e.hierarchy;
  for (EdgeId id = 0; id < e.graph.edge_count(); ++id) {
    const Edge& ed = e.graph.edge(id);
    Rational length = ed.weight / h.scale;
    for (std::size_t i = 1; i <= h.levels + 1; ++i) {
      if (length <= power(Rational(2), static_cast<long>(i))) break;
      if (!h.contains(i - 1, ed.u) || !h.contains(i - 1, ed.v)) return id;
    }
  }
  return std::nullopt;
}

Rational skeleton_bound(const HubHierarchy& h, std::size_t doubling_constant) {
  std::size_t exponent = ceil_log2(Rational(static_cast<long>(std::max<std::size_t>(doubling_constant, 1))));
  Rational base = Rational(4096) * static_cast<long>(h.effective_levels()) / h.epsilon;
  return power(base, static_cast<long>(exponent));
}

}  // namespace atlas
