#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "atlas/classic.hpp"
#include "atlas/doubling.hpp"
#include "atlas/gadgets.hpp"
#include "atlas/graph.hpp"
#include "atlas/highway.hpp"
#include "atlas/kcenter.hpp"
#include "atlas/limits.hpp"
#include "atlas/skeleton.hpp"

namespace atlas {

enum class ParameterStatus { ok, skipped_cap, tie_flagged };

std::string_view to_string(ParameterStatus s);
ParameterStatus parse_parameter_status(std::string_view text);

// Parameter names, in report order: kappa hd1 hd2 hd3 ml bw pw tw dl hindex
// maxdeg mindeg ddim. "ddim" reports the doubling constant d; its witness
// carries log2(d) as well.
const std::vector<std::string>& parameter_names();

struct ParameterEntry {
  std::string name;
  ParameterStatus status = ParameterStatus::ok;
  std::optional<Rational> value;  // absent when skipped
  nlohmann::json witness = nlohmann::json::object();
  std::string note;
};

struct RelationshipCheck {
  std::string name;
  Rational lhs;
  Relation relation = Relation::le;
  Rational rhs;
  bool pass = false;
};

struct ParameterReport {
  std::string graph_id;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<ParameterEntry> parameters;
  std::vector<RelationshipCheck> checks;

  const ParameterEntry* find(std::string_view name) const;
  std::vector<std::string> skipped() const;
  bool all_pass() const;
};

// Computes one named parameter under the limits and the per-parameter
// deadline. Cap overruns and deadline expiry give status skipped-cap.
ParameterEntry compute_parameter(const WeightedGraph& g, std::string_view name, const Limits& limits);

// The hierarchy relationships that apply to the computed parameters. A check
// is emitted only when every parameter it mentions has a value.
std::vector<RelationshipCheck> relationship_checks(const WeightedGraph& g, std::span<const ParameterEntry> params);

// All parameters (run on up to limits.jobs threads) plus relationship checks.
ParameterReport compute_report(const WeightedGraph& g, std::string graph_id, const Limits& limits);

void to_json(nlohmann::json& j, const ParameterEntry& e);
void from_json(const nlohmann::json& j, ParameterEntry& e);
void to_json(nlohmann::json& j, const RelationshipCheck& c);
void from_json(const nlohmann::json& j, RelationshipCheck& c);
void to_json(nlohmann::json& j, const ParameterReport& r);
void from_json(const nlohmann::json& j, ParameterReport& r);

std::string csv_header();
std::string to_csv(const ParameterReport& r);

// Witness serializations shared by the report and the command line.
nlohmann::json to_json_value(const SkeletonResult& r);
nlohmann::json to_json_value(const HighwayWitness& w);
nlohmann::json to_json_value(const MaxLeafResult& r, const WeightedGraph& g);
nlohmann::json to_json_value(const BandwidthResult& r);
nlohmann::json to_json_value(const WidthResult& r);
nlohmann::json to_json_value(const LinearForestResult& r);
nlohmann::json to_json_value(const DoublingResult& r);
nlohmann::json to_json_value(const CenterSolution& s);

// ---- gadget claims ------------------------------------------------------------

enum class ClaimStatus { pass, fail, skipped };

std::string_view to_string(ClaimStatus s);

struct ClaimResult {
  Claim claim;
  ClaimStatus status = ClaimStatus::skipped;
  std::optional<Rational> actual;
  std::string note;
};

// Evaluates every claim of the spec on `g`. "anchored_hd3" uses the hub of a
// vertex-cover reduction of the original size spec.params["n"] at r = 5/2.
std::vector<ClaimResult> evaluate_claims(const WeightedGraph& g, const GadgetSpec& spec, const Limits& limits);
std::vector<ClaimResult> run_gadget_claims(const Gadget& gadget, const Limits& limits);

void to_json(nlohmann::json& j, const ClaimResult& c);

// ---- corpus verification --------------------------------------------------------

struct FileError {
  std::string file;
  std::string message;
};

struct ClaimFileResult {
  std::string file;
  std::vector<ClaimResult> claims;
};

struct CorpusReport {
  std::vector<ParameterReport> reports;
  std::vector<ClaimFileResult> claim_results;
  std::vector<FileError> errors;

  // True iff every relationship check and every evaluated claim passed.
  bool all_pass() const;
};

// Reads every graph file in `dir` (sorted by name; *.json files are not
// graphs). A sidecar "<file>.claims.json" holding a GadgetSpec is evaluated
// against its graph. Unreadable files become error entries.
CorpusReport verify_corpus(const std::filesystem::path& dir, const Limits& limits);

void to_json(nlohmann::json& j, const CorpusReport& r);

}  // namespace atlas
