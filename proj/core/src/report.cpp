#include "atlas/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "atlas/deadline.hpp"
#include "atlas/error.hpp"
#include "atlas/graph_io.hpp"
#include "atlas/shortest_paths.hpp"

namespace atlas {

using nlohmann::json;

std::string_view to_string(ParameterStatus s) {
  switch (s) {
    case ParameterStatus::ok:
      return "ok";
    case ParameterStatus::skipped_cap:
      return "skipped-cap";
    case ParameterStatus::tie_flagged:
      return "tie-flagged";
  }
  return "?";
}

ParameterStatus parse_parameter_status(std::string_view text) {
  if (text == "ok") return ParameterStatus::ok;
  if (text == "skipped-cap") return ParameterStatus::skipped_cap;
  if (text == "tie-flagged") return ParameterStatus::tie_flagged;
  throw InvalidInput("unknown parameter status '" + std::string(text) + "'");
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names{"kappa", "hd1", "hd2",    "hd3",    "ml",     "bw",  "pw",
                                              "tw",    "dl",  "hindex", "maxdeg", "mindeg", "ddim"};
  return names;
}

const ParameterEntry* ParameterReport::find(std::string_view name) const {
  for (const auto& p : parameters) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::vector<std::string> ParameterReport::skipped() const {
  std::vector<std::string> out;
  for (const auto& p : parameters) {
    if (p.status == ParameterStatus::skipped_cap) out.push_back(p.name);
  }
  return out;
}

bool ParameterReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationshipCheck& c) { return c.pass; });
}

// ---- witness serialization -------------------------------------------------------

namespace {

json vertex_json(VertexId v) { return v == kNoVertex ? json(nullptr) : json(v); }

json edge_pairs(const WeightedGraph& g, std::span<const EdgeId> edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

}  // namespace

json to_json_value(const SkeletonResult& r) {
  return {{"kappa", r.kappa},
          {"witness_source", vertex_json(r.witness_source)},
          {"witness_radius", to_string(r.witness_radius)},
          {"had_ties", r.had_ties}};
}

json to_json_value(const HighwayWitness& w) {
  return {{"definition", to_string(w.definition)},
          {"value", w.value},
          {"anchor", vertex_json(w.anchor)},
          {"radius", to_string(w.radius)},
          {"hitting_set", w.hitting_set},
          {"had_ties", w.had_ties}};
}

json to_json_value(const MaxLeafResult& r, const WeightedGraph& g) {
  return {{"value", r.value}, {"tree_edges", edge_pairs(g, r.tree_edges)}};
}

json to_json_value(const BandwidthResult& r) { return {{"value", r.value}, {"labeling", r.labeling.position}}; }

json to_json_value(const WidthResult& r) {
  json edges = json::array();
  for (auto [a, b] : r.decomposition.tree_edges) edges.push_back({a, b});
  return {{"value", r.value},
          {"kind", r.decomposition.kind == DecompositionKind::path ? "path" : "tree"},
          {"bags", r.decomposition.bags},
          {"tree_edges", edges}};
}

json to_json_value(const LinearForestResult& r) { return {{"value", r.value}, {"deleted", r.deleted}}; }

json to_json_value(const DoublingResult& r) {
  return {{"constant", r.constant},
          {"dimension", r.dimension},
          {"center", vertex_json(r.center)},
          {"radius", to_string(r.radius)},
          {"cover_centers", r.cover_centers}};
}

json to_json_value(const CenterSolution& s) { return {{"centers", s.centers}, {"radius", to_string(s.radius)}}; }

// ---- parameters -------------------------------------------------------------------

namespace {

Rational count(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

void fill(ParameterEntry& e, std::size_t value, json witness, bool ties = false) {
  e.value = count(value);
  e.witness = std::move(witness);
  e.status = ties ? ParameterStatus::tie_flagged : ParameterStatus::ok;
}

void compute_into(ParameterEntry& e, const WeightedGraph& g, const Limits& limits) {
  const std::string& name = e.name;
  if (name == "kappa") {
    SkeletonResult r = skeleton_dimension(g);
    fill(e, r.kappa, to_json_value(r), r.had_ties);
  } else if (name == "hd1" || name == "hd2" || name == "hd3") {
    HighwayWitness w = highway_dimension(g, parse_highway_definition(name), limits.highway());
    fill(e, w.value, to_json_value(w), w.had_ties);
  } else if (name == "ml") {
    MaxLeafResult r = max_leaf_number(g, limits.classic());
    fill(e, r.value, to_json_value(r, g));
  } else if (name == "bw") {
    BandwidthResult r = bandwidth(g, limits.classic());
    fill(e, r.value, to_json_value(r));
  } else if (name == "pw") {
    WidthResult r = pathwidth(g, limits.classic());
    fill(e, r.value, to_json_value(r));
  } else if (name == "tw") {
    WidthResult r = treewidth(g, limits.classic());
    fill(e, r.value, to_json_value(r));
  } else if (name == "dl") {
    LinearForestResult r = distance_to_linear_forest(g, limits.classic());
    fill(e, r.value, to_json_value(r));
  } else if (name == "hindex") {
    fill(e, h_index(g), json::object());
  } else if (name == "maxdeg") {
    fill(e, degree_stats(g).max, json::object());
  } else if (name == "mindeg") {
    fill(e, degree_stats(g).min, json::object());
  } else if (name == "ddim") {
    DoublingResult r = doubling_dimension(g, limits.ddim);
    fill(e, r.constant, to_json_value(r));
  } else {
    throw InvalidInput("unknown parameter '" + name + "'");
  }
}

}  // namespace

ParameterEntry compute_parameter(const WeightedGraph& g, std::string_view name, const Limits& limits) {
  ParameterEntry e;
  e.name = std::string(name);
  if (std::find(parameter_names().begin(), parameter_names().end(), e.name) == parameter_names().end()) {
    throw InvalidInput("unknown parameter '" + e.name + "'");
  }
  try {
    ScopedDeadline deadline(limits.timeout);
    compute_into(e, g, limits);
  } catch (const CapExceeded& ex) {
    e.status = ParameterStatus::skipped_cap;
    e.value.reset();
    e.witness = json::object();
    e.note = ex.what();
  } catch (const DeadlineExceeded& ex) {
    e.status = ParameterStatus::skipped_cap;
    e.value.reset();
    e.witness = json::object();
    e.note = ex.what();
  }
  return e;
}

std::vector<RelationshipCheck> relationship_checks(const WeightedGraph& g, std::span<const ParameterEntry> params) {
  auto value = [&](std::string_view name) -> std::optional<Rational> {
    for (const auto& p : params) {
      if (p.name == name) return p.value;
    }
    return std::nullopt;
  };
  std::vector<RelationshipCheck> out;
  auto add = [&](std::string name, std::optional<Rational> lhs, std::optional<Rational> rhs) {
    if (!lhs || !rhs) return;
    out.push_back({std::move(name), *lhs, Relation::le, *rhs, *lhs <= *rhs});
  };
  auto affine = [](std::optional<Rational> v, long mul, long add_value) -> std::optional<Rational> {
    if (!v) return v;
    return Rational(*v * mul + add_value);
  };
  const auto kappa = value("kappa");
  const auto hd1 = value("hd1");
  const auto hd2 = value("hd2");
  const auto hd3 = value("hd3");
  const auto ml = value("ml");
  const auto bw = value("bw");
  const auto pw = value("pw");
  const auto tw = value("tw");
  const auto dl = value("dl");

  add("kappa <= ml", kappa, ml);
  add("bw <= ml", bw, ml);
  add("pw <= bw", pw, bw);
  add("tw <= pw", tw, pw);
  add("maxdeg <= 2 bw", value("maxdeg"), affine(bw, 2, 0));
  if (g.vertex_count() >= 2 && is_connected(g)) add("dl <= ml - 1", dl, affine(ml, 1, -1));
  add("pw <= dl + 1", pw, affine(dl, 1, 1));
  add("hindex <= maxdeg", value("hindex"), value("maxdeg"));
  add("mindeg <= tw", value("mindeg"), tw);
  add("hd2 <= hd1", hd2, hd1);
  std::optional<Rational> hd3_bound;
  if (hd3) hd3_bound = Rational(*hd3 * (*hd3 + 1));
  add("hd1 <= hd3 (hd3 + 1)", hd1, hd3_bound);
  add("hd2 <= hd3", hd2, hd3);
  add("kappa <= hd3", kappa, hd3);
  add("ddim <= 2 kappa + 1", value("ddim"), affine(kappa, 2, 1));
  return out;
}

ParameterReport compute_report(const WeightedGraph& g, std::string graph_id, const Limits& limits) {
  ParameterReport report;
  report.graph_id = std::move(graph_id);
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  const auto& names = parameter_names();
  report.parameters.resize(names.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) report.parameters[i] = compute_parameter(g, names[i], limits);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(limits.jobs, static_cast<unsigned>(names.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  report.checks = relationship_checks(g, report.parameters);
  return report;
}

// ---- JSON / CSV -------------------------------------------------------------------

void to_json(json& j, const ParameterEntry& e) {
  j = {{"name", e.name},
       {"status", to_string(e.status)},
       {"value", e.value ? json(to_string(*e.value)) : json(nullptr)},
       {"witness", e.witness},
       {"note", e.note}};
}

void from_json(const json& j, ParameterEntry& e) {
  e.name = j.at("name").get<std::string>();
  e.status = parse_parameter_status(j.at("status").get<std::string>());
  const auto& v = j.at("value");
  if (v.is_null()) {
    e.value.reset();
  } else {
    e.value = parse_rational(v.get<std::string>());
  }
  e.witness = j.value("witness", json::object());
  e.note = j.value("note", std::string{});
}

void to_json(json& j, const RelationshipCheck& c) {
  j = {{"name", c.name},
       {"lhs", to_string(c.lhs)},
       {"relation", to_string(c.relation)},
       {"rhs", to_string(c.rhs)},
       {"pass", c.pass}};
}

void from_json(const json& j, RelationshipCheck& c) {
  c.name = j.at("name").get<std::string>();
  c.lhs = parse_rational(j.at("lhs").get<std::string>());
  c.relation = parse_relation(j.at("relation").get<std::string>());
  c.rhs = parse_rational(j.at("rhs").get<std::string>());
  c.pass = j.at("pass").get<bool>();
}

void to_json(json& j, const ParameterReport& r) {
  j = {{"graph_id", r.graph_id},
       {"vertices", r.vertices},
       {"edges", r.edges},
       {"parameters", r.parameters},
       {"skipped", r.skipped()},
       {"checks", r.checks},
       {"pass", r.all_pass()}};
}

void from_json(const json& j, ParameterReport& r) {
  r.graph_id = j.at("graph_id").get<std::string>();
  r.vertices = j.at("vertices").get<std::size_t>();
  r.edges = j.at("edges").get<std::size_t>();
  r.parameters = j.at("parameters").get<std::vector<ParameterEntry>>();
  r.checks = j.at("checks").get<std::vector<RelationshipCheck>>();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() { return "graph_id,kind,name,status,value,detail\n"; }

std::string to_csv(const ParameterReport& r) {
  std::ostringstream out;
  const std::string id = csv_field(r.graph_id);
  for (const auto& p : r.parameters) {
    out << id << ",parameter," << p.name << ',' << to_string(p.status) << ',' << (p.value ? to_string(*p.value) : "")
        << ',' << csv_field(p.note) << '\n';
  }
  for (const auto& c : r.checks) {
    out << id << ",check," << csv_field(c.name) << ',' << (c.pass ? "pass" : "fail") << ',' << to_string(c.lhs) << ','
        << to_string(c.relation) << ' ' << to_string(c.rhs) << '\n';
  }
  return out.str();
}

// ---- claims -----------------------------------------------------------------------

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

void to_json(json& j, const ClaimResult& c) {
  j = {{"parameter", c.claim.parameter},
       {"relation", to_string(c.claim.relation)},
       {"expected", to_string(c.claim.value)},
       {"actual", c.actual ? json(to_string(*c.actual)) : json(nullptr)},
       {"status", to_string(c.status)},
       {"note", c.note}};
}

namespace {

struct Measured {
  std::optional<Rational> value;
  std::string note;
};

Measured measure(const WeightedGraph& g, const GadgetSpec& spec, const std::string& parameter, const Limits& limits) {
  if (parameter == "n") return {count(g.vertex_count()), {}};
  if (parameter == "metric") {
    if (!is_connected(g)) return {Rational(0), "disconnected"};
    return {Rational(is_metric(g).metric ? 1 : 0), {}};
  }
  if (parameter == "anchored_hd3") {
    auto it = spec.params.find("n");
    if (it == spec.params.end()) return {std::nullopt, "spec lacks parameter n"};
    try {
      ScopedDeadline deadline(limits.timeout);
      require_cap("vertex cover", static_cast<std::size_t>(it->second), limits.vc);
      ShortestPathCatalog catalog(g, limits.catalog);
      HighwayWitness w = anchored_highway(catalog, vc_reduction_hub(static_cast<std::size_t>(it->second)),
                                          make_rational(5, 2), HighwayDefinition::hd3);
      return {count(w.value), {}};
    } catch (const CapExceeded& ex) {
      return {std::nullopt, ex.what()};
    } catch (const DeadlineExceeded& ex) {
      return {std::nullopt, ex.what()};
    }
  }
  ParameterEntry e = compute_parameter(g, parameter, limits);
  return {e.value, e.note};
}

}  // namespace

std::vector<ClaimResult> evaluate_claims(const WeightedGraph& g, const GadgetSpec& spec, const Limits& limits) {
  std::vector<ClaimResult> out;
  std::map<std::string, Measured> cache;
  for (const Claim& c : spec.claims) {
    auto it = cache.find(c.parameter);
    if (it == cache.end()) it = cache.emplace(c.parameter, measure(g, spec, c.parameter, limits)).first;
    ClaimResult r;
    r.claim = c;
    r.actual = it->second.value;
    r.note = it->second.note;
    if (!r.actual) {
      r.status = ClaimStatus::skipped;
    } else {
      r.status = holds(*r.actual, c.relation, c.value) ? ClaimStatus::pass : ClaimStatus::fail;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClaimResult> run_gadget_claims(const Gadget& gadget, const Limits& limits) {
  return evaluate_claims(gadget.graph, gadget.spec, limits);
}

// ---- corpus -----------------------------------------------------------------------

bool CorpusReport::all_pass() const {
  for (const auto& r : reports) {
    if (!r.all_pass()) return false;
  }
  for (const auto& f : claim_results) {
    for (const auto& c : f.claims) {
      if (c.status == ClaimStatus::fail) return false;
    }
  }
  return true;
}

CorpusReport verify_corpus(const std::filesystem::path& dir, const Limits& limits) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidInput("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() != ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  CorpusReport out;
  for (const auto& file : files) {
    const std::string name = file.filename().string();
    try {
      WeightedGraph g = read_graph_file(file);
      out.reports.push_back(compute_report(g, name, limits));
      fs::path sidecar = file;
      sidecar += ".claims.json";
      if (fs::exists(sidecar)) {
        std::ifstream in(sidecar);
        GadgetSpec spec = json::parse(in).get<GadgetSpec>();
        out.claim_results.push_back({name, evaluate_claims(g, spec, limits)});
      }
    } catch (const std::exception& ex) {
      out.errors.push_back({name, ex.what()});
    }
  }
  return out;
}

void to_json(json& j, const CorpusReport& r) {
  json claims = json::array();
  for (const auto& f : r.claim_results) claims.push_back({{"file", f.file}, {"results", f.claims}});
  json errors = json::array();
  for (const auto& e : r.errors) errors.push_back({{"file", e.file}, {"message", e.message}});
  j = {{"reports", r.reports}, {"claims", claims}, {"errors", errors}, {"pass", r.all_pass()}};
}

}  // namespace atlas
