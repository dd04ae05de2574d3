// One PASS/FAIL line per acceptance criterion. Exit status is 0 iff all pass.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "atlas/classic.hpp"
#include "atlas/doubling.hpp"
#include "atlas/embedding.hpp"
#include "atlas/gadgets.hpp"
#include "atlas/graph_io.hpp"
#include "atlas/highway.hpp"
#include "atlas/hitting_set.hpp"
#include "atlas/kcenter.hpp"
#include "atlas/report.hpp"
#include "atlas/skeleton.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using atlas::CaterpillarVariant;
using atlas::HighwayDefinition;
using atlas::make_rational;
using atlas::Rational;
using atlas::WeightedGraph;

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

struct CorpusGraph {
  std::string name;
  WeightedGraph graph;
};

std::vector<CorpusGraph> load_corpus() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(ATLAS_CORPUS_DIR)) {
    if (entry.is_regular_file() && entry.path().extension() != ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusGraph> out;
  for (const auto& f : files) out.push_back({f.filename().string(), atlas::read_graph_file(f)});
  return out;
}

std::size_t max_degree(const WeightedGraph& g) { return atlas::degree_stats(g).max; }

Outcome skeleton_equivalence() {
  Outcome o;
  std::mt19937 rng(1);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_connected_graph(2 + i % 9, 0.25 + 0.05 * (i % 5), static_cast<oracle::Weights>(i % 3), rng);
    o.expect(atlas::skeleton_dimension(g).kappa == atlas::brute_force_skeleton_dimension(g),
             "random graph " + std::to_string(i));
  }
  std::vector<atlas::Gadget> gadgets;
  for (std::size_t n = 2; n <= 12; ++n) gadgets.push_back(atlas::star(n));
  for (std::size_t l = 1; l <= 8; ++l) gadgets.push_back(atlas::subdivided_star(l));
  for (std::size_t n = 2; n <= 8; ++n) gadgets.push_back(atlas::complete_graph_exp_weights(n));
  for (std::size_t b = 1; b <= 10; ++b) {
    for (auto v : {CaterpillarVariant::hd2_lower_bound, CaterpillarVariant::skeleton_bandwidth,
                   CaterpillarVariant::skeleton_three, CaterpillarVariant::hd1_constant}) {
      gadgets.push_back(atlas::caterpillar(b, v));
    }
  }
  for (std::size_t d = 1; d <= 2; ++d) gadgets.push_back(atlas::binary_tree_geometric(d));
  for (std::size_t q = 2; q <= 3; ++q) gadgets.push_back(atlas::subdivided_grid(q));
  for (std::size_t n = 3; n <= 8; ++n) {
    gadgets.push_back(atlas::spanning_tree_tight_weights(oracle::complete_graph(n), true));
    gadgets.push_back(atlas::spanning_tree_tight_weights(oracle::cycle_graph(n), false));
  }
  gadgets.push_back(atlas::spanning_tree_tight_weights(oracle::petersen_graph(), true));
  gadgets.push_back(atlas::vc_reduction(oracle::cycle_graph(5)));
  gadgets.push_back(atlas::vc_reduction(oracle::petersen_graph()));
  gadgets.push_back(atlas::vc_reduction(oracle::cycle_graph(8)));
  for (const auto& g : gadgets) {
    if (g.graph.vertex_count() > 64) continue;
    o.expect(atlas::skeleton_dimension(g.graph).kappa == atlas::brute_force_skeleton_dimension(g.graph),
             g.spec.family + " n=" + std::to_string(g.graph.vertex_count()));
  }
  return o;
}

Outcome paper_values() {
  Outcome o;
  for (std::size_t n = 2; n <= 10; ++n) {
    auto s = atlas::star(n).graph;
    o.expect(atlas::skeleton_dimension(s).kappa == n - 1, "star kappa n=" + std::to_string(n));
    o.expect(atlas::treewidth(s).value == 1, "star tw n=" + std::to_string(n));
  }
  for (std::size_t b = 2; b <= 8; ++b) {
    auto c = atlas::caterpillar(b, CaterpillarVariant::skeleton_three).graph;
    o.expect(atlas::skeleton_dimension(c).kappa == 3, "skel-3 caterpillar b=" + std::to_string(b));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    auto k = oracle::complete_graph(n);
    o.expect(atlas::bandwidth(k).value == n - 1, "K_n bw n=" + std::to_string(n));
    o.expect(atlas::max_leaf_number(k).value == n - 1, "K_n ml n=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    auto k = atlas::complete_graph_exp_weights(n).graph;
    o.expect(atlas::highway_dimension(k, HighwayDefinition::hd1).value == 1, "exp clique hd1 n=" + std::to_string(n));
  }
  for (std::size_t l = 1; l <= 6; ++l) {
    auto s = atlas::subdivided_star(l).graph;
    o.expect(atlas::highway_dimension(s, HighwayDefinition::hd2).value == l, "subdivided star hd2 l=" + std::to_string(l));
  }
  for (std::size_t d = 1; d <= 2; ++d) {
    auto t = atlas::binary_tree_geometric(d).graph;
    o.expect(atlas::skeleton_dimension(t).kappa <= 3, "binary tree kappa d=" + std::to_string(d));
    o.expect(atlas::pathwidth(t).value == d, "binary tree pw d=" + std::to_string(d));
  }
  auto grid = atlas::subdivided_grid(3).graph;
  o.expect(atlas::is_metric(grid).metric, "subdivided grid metric");
  o.expect(atlas::skeleton_dimension(grid).kappa <= 10, "subdivided grid kappa");
  atlas::HighwayCaps caps;
  caps.hd2 = grid.vertex_count();
  o.expect(atlas::highway_dimension(grid, HighwayDefinition::hd2, caps).value >= 3, "subdivided grid hd2");
  for (std::size_t b = 2; b <= 6; ++b) {
    auto c = atlas::caterpillar(b, CaterpillarVariant::hd1_constant).graph;
    o.expect(atlas::highway_dimension(c, HighwayDefinition::hd1).value <= 7, "hd1-const caterpillar b=" + std::to_string(b));
  }
  return o;
}

Outcome tightness() {
  Outcome o;
  std::mt19937 rng(3);
  for (int i = 0; i < 24; ++i) {
    auto g = oracle::random_connected_graph(3 + i % 10, 0.2 + 0.1 * (i % 4), oracle::Weights::unit, rng);
    auto t = atlas::spanning_tree_tight_weights(g, true).graph;
    o.expect(atlas::is_metric(t).metric, "metric " + std::to_string(i));
    o.expect(atlas::skeleton_dimension(t).kappa == atlas::max_leaf_number(g).value, "kappa = ml " + std::to_string(i));
  }
  return o;
}

Outcome hierarchy(const atlas::CorpusReport& corpus) {
  Outcome o;
  for (const auto& r : corpus.reports) {
    for (const auto& c : r.checks) o.expect(c.pass, r.graph_id + ": " + c.name);
  }
  for (const auto& e : corpus.errors) o.expect(false, e.file + ": " + e.message);
  o.expect(!corpus.reports.empty(), "corpus is empty");
  return o;
}

Outcome vertex_cover_identity(const std::vector<CorpusGraph>& corpus) {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    if (g.vertex_count() > 10 || g.edge_count() == 0 || max_degree(g) > 3) continue;
    auto red = atlas::vc_reduction(g);
    atlas::ShortestPathCatalog cat(red.graph, red.graph.vertex_count());
    auto w = atlas::anchored_highway(cat, atlas::vc_reduction_hub(g.vertex_count()), make_rational(5, 2),
                                     HighwayDefinition::hd3);
    std::size_t expected = atlas::min_vertex_cover(g).size() + g.vertex_count() + 1;
    o.expect(w.value == expected, name);
  }
  return o;
}

atlas::FiniteMetric random_metric(std::size_t n, std::mt19937& rng) {
  auto g = oracle::random_connected_graph(n, 0.4, oracle::Weights::small_integer, rng);
  std::vector<atlas::Edge> edges(g.edges().begin(), g.edges().end());
  std::uniform_int_distribution<int> den(1, 9);
  for (auto& e : edges) e.weight /= den(rng);
  return atlas::FiniteMetric::from_graph(WeightedGraph(n, edges));
}

Outcome embedding() {
  Outcome o;
  std::mt19937 rng(6);
  for (int i = 0; i < 12; ++i) {
    auto x = random_metric(2 + i % 11, rng);
    auto ddim = atlas::doubling_dimension(x.distances()).constant;
    for (Rational eps : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
      std::string tag = "metric " + std::to_string(i) + " eps " + atlas::to_string(eps);
      auto e = atlas::build_embedded_graph(x, eps);
      o.expect(atlas::check_hub_hierarchy(x, e.hierarchy).valid(), tag + " hierarchy");
      o.expect(atlas::verify_distortion(x, e.graph, eps).within_bounds, tag + " distortion");
      o.expect(atlas::pruning_preserves_distances(e), tag + " pruning");
      o.expect(!atlas::long_edge_violation(e).has_value(), tag + " long edges");
      auto kappa = atlas::skeleton_dimension(e.graph).kappa;
      o.expect(Rational(static_cast<long>(kappa)) <= atlas::skeleton_bound(e.hierarchy, ddim), tag + " kappa bound");
    }
  }
  return o;
}

Outcome kcenter(const std::vector<CorpusGraph>& corpus) {
  Outcome o;
  for (const auto& [name, g] : corpus) {
    if (g.vertex_count() > 14 || !atlas::is_connected(g)) continue;
    auto dist = atlas::distance_matrix(g);
    for (std::size_t k = 1; k <= 3 && k <= g.vertex_count(); ++k) {
      auto greedy = atlas::hochbaum_shmoys(dist, k);
      auto exact = atlas::exact_kcenter(dist, k);
      o.expect(greedy.radius <= 2 * exact.radius, name + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome determinism(const atlas::CorpusReport& first, const atlas::Limits& limits) {
  Outcome o;
  auto second = atlas::verify_corpus(ATLAS_CORPUS_DIR, limits);
  o.expect(nlohmann::json(first).dump() == nlohmann::json(second).dump(), "corpus reports differ");
  return o;
}

bool report(const char* id, const char* title, const Outcome& o) {
  bool pass = o.failures.empty() && o.cases > 0;
  std::printf("%s %s: %s (%zu cases", id, pass ? "PASS" : "FAIL", title, o.cases);
  if (!o.failures.empty()) std::printf(", first failure: %s", o.failures.front().c_str());
  std::printf(")\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  atlas::Limits limits;
  auto corpus = load_corpus();
  auto corpus_report = atlas::verify_corpus(ATLAS_CORPUS_DIR, limits);

  bool ok = true;
  ok &= report("AC1", "skeleton sweep equals brute force", skeleton_equivalence());
  ok &= report("AC2", "paper values", paper_values());
  ok &= report("AC3", "tight metric weights give kappa = ml", tightness());
  ok &= report("AC4", "parameter hierarchy on corpus", hierarchy(corpus_report));
  ok &= report("AC5", "anchored vertex-cover identity", vertex_cover_identity(corpus));
  ok &= report("AC6", "hub embedding properties", embedding());
  ok &= report("AC7", "greedy k-center within factor 2", kcenter(corpus));
  ok &= report("AC8", "deterministic reports", determinism(corpus_report, limits));
  return ok ? 0 : 1;
}
