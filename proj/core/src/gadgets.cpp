#include "atlas/gadgets.hpp"

#include <algorithm>
#include <string>

#include <nlohmann/json.hpp>

#include "atlas/classic.hpp"
#include "atlas/error.hpp"
#include "atlas/hitting_set.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::eq:
      return "=";
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "=" || text == "==") return Relation::eq;
  if (text == "<=") return Relation::le;
  if (text == ">=") return Relation::ge;
  throw InvalidInput("unknown relation '" + std::string(text) + "'");
}

bool holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::eq:
      return lhs == rhs;
    case Relation::le:
      return lhs <= rhs;
    case Relation::ge:
      return lhs >= rhs;
  }
  return false;
}

void to_json(nlohmann::json& j, const Claim& c) {
  j = {{"parameter", c.parameter}, {"relation", to_string(c.relation)}, {"value", to_string(c.value)}};
}

void from_json(const nlohmann::json& j, Claim& c) {
  c.parameter = j.at("parameter").get<std::string>();
  c.relation = parse_relation(j.at("relation").get<std::string>());
  const auto& v = j.at("value");
  c.value = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
}

void to_json(nlohmann::json& j, const GadgetSpec& s) {
  j = {{"family", s.family}, {"params", s.params}, {"variant", s.variant}, {"claims", s.claims}};
}

void from_json(const nlohmann::json& j, GadgetSpec& s) {
  s.family = j.at("family").get<std::string>();
  s.params = j.value("params", std::map<std::string, long>{});
  s.variant = j.value("variant", std::string{});
  s.claims = j.value("claims", std::vector<Claim>{});
}

namespace {

Claim claim(std::string parameter, Relation rel, Rational value) { return {std::move(parameter), rel, std::move(value)}; }

Claim claim(std::string parameter, Relation rel, std::size_t value) {
  return claim(std::move(parameter), rel, Rational(static_cast<long>(value)));
}

}  // namespace

Gadget star(std::size_t n) {
  if (n < 2) throw InvalidInput("star needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({0, v, 1});
  Gadget out{WeightedGraph(n, std::move(edges)), {"star", {{"n", static_cast<long>(n)}}, "unit", {}}};
  auto& c = out.spec.claims;
  c.push_back(claim("kappa", Relation::eq, n - 1));
  c.push_back(claim("tw", Relation::eq, 1));
  c.push_back(claim("bw", Relation::eq, n / 2));
  c.push_back(claim("hd1", Relation::eq, 1));
  if (n >= 3) c.push_back(claim("ml", Relation::eq, n - 1));
  if (n >= 4) c.push_back(claim("dl", Relation::eq, 1));
  return out;
}

Gadget subdivided_star(std::size_t l) {
  if (l < 1) throw InvalidInput("subdivided star needs l >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l; ++i) {
    edges.push_back({0, 1 + i, 1});
    edges.push_back({1 + i, 1 + l + i, 1});
  }
  Gadget out{WeightedGraph(2 * l + 1, std::move(edges)), {"subdivided-star", {{"l", static_cast<long>(l)}}, "unit", {}}};
  out.spec.claims.push_back(claim("hd2", Relation::eq, l));
  if (l >= 3) out.spec.claims.push_back(claim("dl", Relation::eq, 1));
  return out;
}

Gadget complete_graph_exp_weights(std::size_t n) {
  if (n < 2) throw InvalidInput("complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j, power(Rational(4), static_cast<long>(j + 1))});
  }
  Gadget out{WeightedGraph(n, std::move(edges)), {"complete-exp", {{"n", static_cast<long>(n)}}, "4^max(i,j)", {}}};
  auto& c = out.spec.claims;
  c.push_back(claim("hd1", Relation::eq, 1));
  c.push_back(claim("tw", Relation::eq, n - 1));
  c.push_back(claim("bw", Relation::eq, n - 1));
  if (n >= 3) c.push_back(claim("ml", Relation::eq, n - 1));
  return out;
}

std::string_view to_string(CaterpillarVariant v) {
  switch (v) {
    case CaterpillarVariant::hd2_lower_bound:
      return "hd2-lb";
    case CaterpillarVariant::skeleton_bandwidth:
      return "skel-bw";
    case CaterpillarVariant::skeleton_three:
      return "skel-3";
    case CaterpillarVariant::hd1_constant:
      return "hd1-const";
  }
  return "?";
}

CaterpillarVariant parse_caterpillar_variant(std::string_view text) {
  for (auto v : {CaterpillarVariant::hd2_lower_bound, CaterpillarVariant::skeleton_bandwidth,
                 CaterpillarVariant::skeleton_three, CaterpillarVariant::hd1_constant}) {
    if (text == to_string(v)) return v;
  }
  throw InvalidInput("unknown caterpillar variant '" + std::string(text) + "'");
}

Gadget caterpillar(std::size_t b, CaterpillarVariant variant) {
  if (b < 1) throw InvalidInput("caterpillar needs b >= 1");
  const std::size_t n = 2 * b + 2;
  Rational backbone;
  switch (variant) {
    case CaterpillarVariant::hd2_lower_bound:
      backbone = make_rational(1, static_cast<long>(n));
      break;
    case CaterpillarVariant::skeleton_bandwidth:
      backbone = 1;
      break;
    case CaterpillarVariant::skeleton_three:
      backbone = 2;
      break;
    case CaterpillarVariant::hd1_constant:
      backbone = 5;
      break;
  }
  // skel-bw: every leaf ends up at distance 2b from c_0.
  const Rational target(static_cast<long>(2 * b));
  auto leaf_weight = [&](VertexId attach) {
    if (variant != CaterpillarVariant::skeleton_bandwidth) return Rational(1);
    return Rational(target - backbone * static_cast<long>(attach));
  };
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < b; ++i) edges.push_back({i, i + 1, backbone});
  for (VertexId i = 0; i < b; ++i) edges.push_back({i, b + i, leaf_weight(i)});
  edges.push_back({0, 2 * b, leaf_weight(0)});
  edges.push_back({b - 1, 2 * b + 1, leaf_weight(b - 1)});

  Gadget out{WeightedGraph(n, std::move(edges)),
             {"caterpillar", {{"b", static_cast<long>(b)}}, std::string(to_string(variant)), {}}};
  auto& c = out.spec.claims;
  c.push_back(claim("bw", Relation::eq, 2));
  c.push_back(claim("pw", Relation::eq, 1));
  switch (variant) {
    case CaterpillarVariant::hd2_lower_bound:
      c.push_back(claim("hd2", Relation::ge, b));
      break;
    case CaterpillarVariant::skeleton_bandwidth:
      c.push_back(claim("kappa", Relation::eq, b + 2));
      break;
    case CaterpillarVariant::skeleton_three:
      c.push_back(claim("kappa", Relation::eq, 3));
      break;
    case CaterpillarVariant::hd1_constant:
      c.push_back(claim("hd1", Relation::le, 7));
      break;
  }
  return out;
}

Gadget binary_tree_geometric(std::size_t d) {
  const std::size_t levels = 2 * d + 1;
  if (levels > 7) throw CapExceeded("binary tree levels", levels, 7);
  const std::size_t n = (std::size_t{1} << levels) - 1;
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    VertexId parent = (v - 1) / 2;
    long level = 0;
    for (VertexId p = parent; p > 0; p = (p - 1) / 2) ++level;
    edges.push_back({parent, v, power(Rational(3), -level)});
  }
  Gadget out{WeightedGraph(n, std::move(edges)), {"binary-tree", {{"d", static_cast<long>(d)}}, "3^-j", {}}};
  out.spec.claims.push_back(claim("kappa", Relation::le, 3));
  out.spec.claims.push_back(claim("pw", Relation::eq, d));
  return out;
}

Gadget subdivided_grid(std::size_t q) {
  if (q < 1) throw InvalidInput("grid needs q >= 1");
  const std::size_t grid = q * q;
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < grid; ++v) edges.push_back({v, v + 1, 1});
  std::vector<std::pair<VertexId, VertexId>> grid_edges;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j + 1 < q; ++j) grid_edges.emplace_back(i * q + j, i * q + j + 1);
  }
  for (std::size_t i = 0; i + 1 < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) grid_edges.emplace_back(i * q + j, (i + 1) * q + j);
  }
  VertexId next = grid;
  for (auto [u, v] : grid_edges) {
    VertexId x = next++;
    VertexId y = next++;
    edges.push_back({u, x, 1});
    edges.push_back({x, y, Rational(static_cast<long>(v - u)) + make_rational(1, 2)});
    edges.push_back({y, v, 1});
  }
  Gadget out{WeightedGraph(next, std::move(edges)), {"subdivided-grid", {{"q", static_cast<long>(q)}}, "", {}}};
  auto& c = out.spec.claims;
  c.push_back(claim("metric", Relation::eq, 1));
  c.push_back(claim("kappa", Relation::le, 10));
  c.push_back(claim("hd2", Relation::ge, q));
  return out;
}

Gadget spanning_tree_tight_weights(const WeightedGraph& g, bool metric) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw InvalidInput("tight weights need n >= 3");
  if (!is_connected(g)) throw InvalidInput("tight weights need a connected graph");
  const MaxLeafResult ml = max_leaf_number(g);
  std::vector<bool> in_tree(g.edge_count(), false);
  std::vector<std::size_t> tree_degree(n, 0);
  for (EdgeId e : ml.tree_edges) {
    in_tree[e] = true;
    ++tree_degree[g.edge(e).u];
    ++tree_degree[g.edge(e).v];
  }
  const Rational inner(1, static_cast<unsigned long>(n));
  std::vector<Edge> tree_edges;
  std::vector<Edge> hop_edges;
  for (EdgeId e : ml.tree_edges) {
    const Edge& ed = g.edge(e);
    bool at_leaf = tree_degree[ed.u] == 1 || tree_degree[ed.v] == 1;
    tree_edges.push_back({ed.u, ed.v, at_leaf ? Rational(2) : inner});
    hop_edges.push_back({ed.u, ed.v, 1});
  }
  const DistanceMatrix tree_dist = distance_matrix(WeightedGraph(n, tree_edges));
  const DistanceMatrix tree_hops = distance_matrix(WeightedGraph(n, hop_edges));

  const std::size_t m = g.edge_count();
  // eps_e = delta * (2^(hops_T(e) + m + 1) + 2^k_e): longer tree detours get
  // larger discounts, and the 2^k_e term keeps all sums distinct.
  const Rational delta = Rational(1) / (Rational(static_cast<long>(n * n)) *
                                        power(Rational(2), static_cast<long>(n + m + 1)));
  std::vector<Edge> edges;
  long k = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    Rational w;
    if (in_tree[e]) {
      bool at_leaf = tree_degree[ed.u] == 1 || tree_degree[ed.v] == 1;
      w = at_leaf ? Rational(2) : inner;
    } else if (!metric) {
      w = 5;
    } else {
      long hops = tree_hops(ed.u, ed.v)->get_num().get_si();
      Rational eps = delta * (power(Rational(2), hops + static_cast<long>(m) + 1) + power(Rational(2), k++));
      w = *tree_dist(ed.u, ed.v) - eps;
    }
    edges.push_back({ed.u, ed.v, w});
  }
  Gadget out{WeightedGraph(n, std::move(edges)),
             {"tight-weights", {{"n", static_cast<long>(n)}}, metric ? "metric" : "plain", {}}};
  out.spec.claims.push_back(claim("kappa", Relation::eq, ml.value));
  out.spec.claims.push_back(claim("ml", Relation::eq, ml.value));
  if (metric) out.spec.claims.push_back(claim("metric", Relation::eq, 1));
  return out;
}

Gadget vc_reduction(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 3) throw InvalidInput("vertex-cover reduction needs maximum degree <= 3");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1});
  const VertexId hub = vc_reduction_hub(n);
  for (VertexId v = 0; v < n; ++v) {
    edges.push_back({v, n + v, 1});
    edges.push_back({n + v, hub, 5});
  }
  Gadget out{WeightedGraph(2 * n + 1, std::move(edges)), {"vc-reduction", {{"n", static_cast<long>(n)}}, "", {}}};
  const std::size_t cover = min_vertex_cover(g).size();
  out.spec.claims.push_back(claim("anchored_hd3", Relation::eq, cover + n + 1));
  out.spec.claims.push_back(claim("n", Relation::eq, 2 * n + 1));
  return out;
}

std::vector<std::string> gadget_families() {
  return {"star",         "subdivided-star", "complete-exp",  "caterpillar",
          "binary-tree",  "subdivided-grid", "tight-weights", "vc-reduction"};
}

Gadget make_gadget(std::string_view family, const std::map<std::string, long>& params, std::string_view variant,
                   const WeightedGraph* base) {
  auto param = [&](const char* name) -> std::size_t {
    auto it = params.find(name);
    if (it == params.end()) throw InvalidInput(std::string(family) + " needs parameter " + name);
    if (it->second < 0) throw InvalidInput(std::string("parameter ") + name + " must be non-negative");
    return static_cast<std::size_t>(it->second);
  };
  auto need_base = [&]() -> const WeightedGraph& {
    if (!base) throw InvalidInput(std::string(family) + " needs an input graph");
    return *base;
  };
  if (family == "star") return star(param("n"));
  if (family == "subdivided-star") return subdivided_star(param("l"));
  if (family == "complete-exp") return complete_graph_exp_weights(param("n"));
  if (family == "caterpillar") return caterpillar(param("b"), parse_caterpillar_variant(variant));
  if (family == "binary-tree") return binary_tree_geometric(param("d"));
  if (family == "subdivided-grid") return subdivided_grid(param("q"));
  if (family == "tight-weights") return spanning_tree_tight_weights(need_base(), variant != "plain");
  if (family == "vc-reduction") return vc_reduction(need_base());
  throw InvalidInput("unknown gadget family '" + std::string(family) + "'");
}

}  // namespace atlas
