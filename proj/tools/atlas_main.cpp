// atlas: graph parameters, gadgets, embeddings and corpus verification.
//
// Exit status: 0 when every executed check passes, 1 when a check fails,
// 2 on bad input.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "atlas/embedding.hpp"
#include "atlas/error.hpp"
#include "atlas/gadgets.hpp"
#include "atlas/graph_io.hpp"
#include "atlas/kcenter.hpp"
#include "atlas/limits.hpp"
#include "atlas/report.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string format = "json";
  std::string config;
  unsigned jobs = 0;

  atlas::Limits limits() const {
    atlas::Limits l = config.empty() ? atlas::Limits{} : atlas::load_limits(config);
    if (jobs > 0) l.jobs = jobs;
    return l;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", c.jobs, "Worker threads");
  cmd->add_option("--config", c.config, "JSON file overriding caps and timeouts")->check(CLI::ExistingFile);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::map<std::string, long> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, long> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw atlas::InvalidInput("expected key=value, got " + item);
    try {
      std::size_t used = 0;
      const long v = std::stol(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw atlas::InvalidInput("bad integer in " + item);
    }
  }
  return out;
}

bool claims_pass(const std::vector<atlas::ClaimResult>& results) {
  for (const auto& r : results) {
    if (r.status == atlas::ClaimStatus::fail) return false;
  }
  return true;
}

void write_claims_csv(std::ostream& out, const std::string& id, const std::vector<atlas::ClaimResult>& results) {
  for (const auto& r : results) {
    out << id << ",claim," << r.claim.parameter << ',' << atlas::to_string(r.status) << ','
        << (r.actual ? atlas::to_string(*r.actual) : "") << ',' << atlas::to_string(r.claim.relation) << ' '
        << atlas::to_string(r.claim.value) << '\n';
  }
}

// ---- subcommands ----------------------------------------------------------------

int run_compute(const std::string& file, const std::vector<std::string>& names, const Common& c) {
  const atlas::Limits limits = c.limits();
  const atlas::WeightedGraph g = atlas::read_graph_file(file);
  atlas::ParameterReport report;
  if (names.empty()) {
    report = atlas::compute_report(g, file, limits);
  } else {
    report.graph_id = file;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    for (const auto& name : names) report.parameters.push_back(atlas::compute_parameter(g, name, limits));
    report.checks = atlas::relationship_checks(g, report.parameters);
  }
  if (c.format == "csv") {
    std::cout << atlas::csv_header() << atlas::to_csv(report);
  } else {
    emit(report);
  }
  return report.all_pass() ? 0 : 1;
}

struct GadgetArgs {
  std::string family;
  std::vector<std::string> params;
  std::string variant;
  std::string base;
  std::string out;
  bool no_check = false;
};

int run_gadget(const GadgetArgs& a, const Common& c) {
  std::optional<atlas::WeightedGraph> base;
  if (!a.base.empty()) base = atlas::read_graph_file(a.base);
  const atlas::Gadget gadget =
      atlas::make_gadget(a.family, parse_params(a.params), a.variant, base ? &*base : nullptr);
  if (!a.out.empty()) {
    std::ofstream graph_out(a.out);
    if (!graph_out) throw atlas::InvalidInput("cannot write " + a.out);
    atlas::write_graph(graph_out, gadget.graph, gadget.spec.family);
    std::ofstream spec_out(a.out + ".claims.json");
    if (!spec_out) throw atlas::InvalidInput("cannot write " + a.out + ".claims.json");
    spec_out << json(gadget.spec).dump(2) << '\n';
  }
  std::vector<atlas::ClaimResult> results;
  if (!a.no_check) results = atlas::run_gadget_claims(gadget, c.limits());
  if (c.format == "csv") {
    std::cout << atlas::csv_header();
    write_claims_csv(std::cout, a.family, results);
  } else {
    emit({{"spec", gadget.spec},
          {"vertices", gadget.graph.vertex_count()},
          {"edges", gadget.graph.edge_count()},
          {"claims", results},
          {"pass", claims_pass(results)}});
  }
  return claims_pass(results) ? 0 : 1;
}

int run_embed(const std::string& metric_file, const std::string& eps_text, const std::string& out,
              const Common& c) {
  const atlas::FiniteMetric x = atlas::read_metric_file(metric_file);
  const atlas::Rational eps = atlas::parse_rational(eps_text);
  if (eps <= 0) throw atlas::InvalidInput("epsilon must be positive");
  const atlas::EmbeddedGraph e = atlas::build_embedded_graph(x, eps);
  if (!out.empty()) {
    std::ofstream graph_out(out);
    if (!graph_out) throw atlas::InvalidInput("cannot write " + out);
    atlas::write_graph(graph_out, e.graph, "embedding eps=" + atlas::to_string(eps));
  }
  const atlas::HierarchyCheck hc = atlas::check_hub_hierarchy(x, e.hierarchy);
  const atlas::DistortionReport d = atlas::verify_distortion(x, e.graph, eps);
  const bool pruned_ok = atlas::pruning_preserves_distances(e);
  const bool long_ok = !atlas::long_edge_violation(e).has_value();
  const bool pass = hc.valid() && d.within_bounds && pruned_ok && long_ok;
  if (c.format == "csv") {
    std::cout << "check,pass\n"
              << "hierarchy," << hc.valid() << '\n'
              << "distortion," << d.within_bounds << '\n'
              << "pruning," << pruned_ok << '\n'
              << "long_edges," << long_ok << '\n';
  } else {
    json hubs = json::array();
    for (const auto& level : e.hierarchy.hubs) hubs.push_back(level);
    emit({{"points", x.size()},
          {"epsilon", atlas::to_string(eps)},
          {"levels", e.hierarchy.levels},
          {"hubs", hubs},
          {"edges", e.graph.edge_count()},
          {"unpruned_edges", e.unpruned.edge_count()},
          {"hierarchy_valid", hc.valid()},
          {"distortion",
           {{"within_bounds", d.within_bounds},
            {"min_stretch", atlas::to_string(d.min_stretch)},
            {"max_stretch", atlas::to_string(d.max_stretch)},
            {"worst_pair", {d.worst_pair.first, d.worst_pair.second}}}},
          {"pruning_preserves_distances", pruned_ok},
          {"long_edges_ok", long_ok},
          {"pass", pass}});
  }
  return pass ? 0 : 1;
}

int run_kcenter(const std::string& file, std::size_t k, bool exact, const Common& c) {
  const atlas::Limits limits = c.limits();
  const atlas::WeightedGraph g = atlas::read_graph_file(file);
  const atlas::CenterSolution greedy = atlas::hochbaum_shmoys(g, k);
  std::optional<atlas::CenterSolution> best;
  if (exact) best = atlas::exact_kcenter(g, k, limits.kcenter);
  const bool pass = !best || greedy.radius <= 2 * best->radius;
  if (c.format == "csv") {
    std::cout << "method,radius,centers\n";
    auto row = [](const char* m, const atlas::CenterSolution& s) {
      std::cout << m << ',' << atlas::to_string(s.radius) << ',';
      for (std::size_t i = 0; i < s.centers.size(); ++i) std::cout << (i ? " " : "") << s.centers[i];
      std::cout << '\n';
    };
    row("greedy", greedy);
    if (best) row("exact", *best);
  } else {
    json j = {{"k", k}, {"greedy", atlas::to_json_value(greedy)}, {"pass", pass}};
    if (best) j["exact"] = atlas::to_json_value(*best);
    emit(j);
  }
  return pass ? 0 : 1;
}

int run_verify(const std::string& dir, const Common& c) {
  const atlas::CorpusReport r = atlas::verify_corpus(dir, c.limits());
  if (c.format == "csv") {
    std::cout << atlas::csv_header();
    for (const auto& rep : r.reports) std::cout << atlas::to_csv(rep);
    for (const auto& f : r.claim_results) write_claims_csv(std::cout, f.file, f.claims);
    for (const auto& e : r.errors) std::cout << e.file << ",error,,fail,," << '"' << e.message << "\"\n";
  } else {
    emit(r);
  }
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeleton dimension, highway dimensions and classic graph parameters"};
  app.require_subcommand(1);
  Common common;

  std::string graph_file;
  std::vector<std::string> names;
  auto* compute = app.add_subcommand("compute", "Compute parameters of one graph");
  compute->add_option("graph", graph_file, "Graph file")->required()->check(CLI::ExistingFile);
  compute->add_option("--param,-p", names, "Parameters to compute (default: all)")
      ->check(CLI::IsMember(atlas::parameter_names()));
  add_common(compute, common);

  GadgetArgs gadget_args;
  auto* gadget = app.add_subcommand("gadget", "Generate a gadget graph and check its claims");
  gadget->add_option("family", gadget_args.family, "Gadget family")
      ->required()
      ->check(CLI::IsMember(atlas::gadget_families()));
  gadget->add_option("--params", gadget_args.params, "Size parameters as key=value");
  gadget->add_option("--variant", gadget_args.variant, "Weighting variant");
  gadget->add_option("--base", gadget_args.base, "Base graph file")->check(CLI::ExistingFile);
  gadget->add_option("--out", gadget_args.out, "Write the graph here and its claims to <out>.claims.json");
  gadget->add_flag("--no-check", gadget_args.no_check, "Skip claim evaluation");
  add_common(gadget, common);

  std::string metric_file, eps_text, embed_out;
  auto* embed = app.add_subcommand("embed", "Embed a finite metric as a sparse weighted graph");
  embed->add_option("--metric", metric_file, "Metric file")->required()->check(CLI::ExistingFile);
  embed->add_option("--epsilon", eps_text, "Distortion parameter p/q")->required();
  embed->add_option("--out", embed_out, "Write the embedded graph here");
  add_common(embed, common);

  std::size_t k = 1;
  bool exact = false;
  auto* kcenter = app.add_subcommand("kcenter", "Greedy k-center, optionally against the exact optimum");
  kcenter->add_option("graph", graph_file, "Graph file")->required()->check(CLI::ExistingFile);
  kcenter->add_option("-k", k, "Number of centers")->required()->check(CLI::PositiveNumber);
  kcenter->add_flag("--exact", exact, "Also solve exactly and check the factor 2");
  add_common(kcenter, common);

  std::string corpus_dir;
  auto* verify = app.add_subcommand("verify", "Check every relationship on a corpus directory");
  verify->add_option("dir", corpus_dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  add_common(verify, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return run_compute(graph_file, names, common);
    if (*gadget) return run_gadget(gadget_args, common);
    if (*embed) return run_embed(metric_file, eps_text, embed_out, common);
    if (*kcenter) return run_kcenter(graph_file, k, exact, common);
    if (*verify) return run_verify(corpus_dir, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
