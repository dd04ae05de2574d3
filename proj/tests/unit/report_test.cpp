#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "atlas/gadgets.hpp"
#include "atlas/graph_io.hpp"
#include "atlas/report.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using atlas::Rational;

const atlas::RelationshipCheck* find_check(const atlas::ParameterReport& r, std::string_view name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("atlas_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Report, CompleteGraphBandwidthEqualsMaxLeaf) {
  auto r = atlas::compute_report(oracle::complete_graph(4), "k4", atlas::Limits{});
  EXPECT_EQ(*r.find("bw")->value, Rational(3));
  EXPECT_EQ(*r.find("ml")->value, Rational(3));
  const auto* c = find_check(r, "bw <= ml");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass);
  EXPECT_TRUE(r.all_pass());
}

TEST(Report, StarSkeletonBelowMaxLeaf) {
  auto r = atlas::compute_report(atlas::star(5).graph, "s5", atlas::Limits{});
  EXPECT_EQ(*r.find("kappa")->value, Rational(4));
  const auto* c = find_check(r, "kappa <= ml");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass);
  EXPECT_EQ(r.parameters.size(), atlas::parameter_names().size());
  for (std::size_t i = 0; i < r.parameters.size(); ++i) EXPECT_EQ(r.parameters[i].name, atlas::parameter_names()[i]);
}

TEST(Report, CapOverrunIsSkippedNotFailed) {
  atlas::Limits limits;
  limits.bw = 3;
  auto r = atlas::compute_report(oracle::path_graph(6), "p6", limits);
  EXPECT_EQ(r.find("bw")->status, atlas::ParameterStatus::skipped_cap);
  EXPECT_FALSE(r.find("bw")->value.has_value());
  EXPECT_EQ(find_check(r, "bw <= ml"), nullptr);
  EXPECT_EQ(r.skipped(), (std::vector<std::string>{"bw"}));
  EXPECT_TRUE(r.all_pass());
}

TEST(Report, TiesAreFlagged) {
  auto r = atlas::compute_report(oracle::cycle_graph(4), "c4", atlas::Limits{});
  EXPECT_EQ(r.find("kappa")->status, atlas::ParameterStatus::tie_flagged);
  EXPECT_TRUE(r.find("kappa")->value.has_value());
}

TEST(Report, JsonRoundTrip) {
  atlas::Limits limits;
  limits.bw = 3;
  auto r = atlas::compute_report(atlas::caterpillar(2, atlas::CaterpillarVariant::skeleton_three).graph, "cat", limits);
  nlohmann::json j = r;
  auto back = j.get<atlas::ParameterReport>();
  EXPECT_EQ(nlohmann::json(back).dump(), j.dump());
  EXPECT_EQ(j["parameters"][0]["value"].get<std::string>(), "3");
}

TEST(Report, ParallelMatchesSerial) {
  atlas::Limits serial, parallel;
  parallel.jobs = 4;
  auto g = oracle::grid_graph(2, 3);
  EXPECT_EQ(nlohmann::json(atlas::compute_report(g, "g", serial)).dump(),
            nlohmann::json(atlas::compute_report(g, "g", parallel)).dump());
}

TEST(Report, CsvHasOneRowPerEntry) {
  auto r = atlas::compute_report(oracle::path_graph(3), "p3", atlas::Limits{});
  std::string csv = atlas::to_csv(r);
  std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(rows, r.parameters.size() + r.checks.size());
  EXPECT_EQ(atlas::csv_header(), "graph_id,kind,name,status,value,detail\n");
}

TEST(Report, RelationshipChecksDetectViolation) {
  std::vector<atlas::ParameterEntry> params(2);
  params[0].name = "pw";
  params[0].value = Rational(3);
  params[1].name = "bw";
  params[1].value = Rational(2);
  auto checks = atlas::relationship_checks(oracle::path_graph(3), params);
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_EQ(checks[0].name, "pw <= bw");
  EXPECT_FALSE(checks[0].pass);
}

TEST(Limits, JsonOverridesSelectedKeys) {
  nlohmann::json j = {{"bw", 5}, {"timeout_ms", 250}};
  auto l = j.get<atlas::Limits>();
  EXPECT_EQ(l.bw, 5u);
  EXPECT_EQ(l.timeout.count(), 250);
  EXPECT_EQ(l.ml, 20u);
  EXPECT_EQ(l.highway().hd3, 16u);
  EXPECT_EQ(l.classic().bandwidth, 5u);
}

TEST(Corpus, EmptyDirectory) {
  auto dir = fresh_dir("empty");
  auto r = atlas::verify_corpus(dir, atlas::Limits{});
  EXPECT_TRUE(r.reports.empty());
  EXPECT_TRUE(r.all_pass());
  fs::remove_all(dir);
}

TEST(Corpus, ReportsGraphsClaimsAndErrors) {
  auto dir = fresh_dir("corpus");
  {
    std::ofstream(dir / "a_k4.txt") << atlas::format_graph(oracle::complete_graph(4));
    auto cat = atlas::caterpillar(6, atlas::CaterpillarVariant::skeleton_three);
    std::ofstream(dir / "b_cat.txt") << atlas::format_graph(cat.graph);
    std::ofstream(dir / "b_cat.txt.claims.json") << nlohmann::json(cat.spec).dump(2);
    std::ofstream(dir / "c_bad.txt") << "2 1\n0 0 1\n";
  }
  auto r = atlas::verify_corpus(dir, atlas::Limits{});
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[0].graph_id, "a_k4.txt");
  ASSERT_EQ(r.claim_results.size(), 1u);
  for (const auto& c : r.claim_results[0].claims) EXPECT_EQ(c.status, atlas::ClaimStatus::pass) << c.claim.parameter;
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].file, "c_bad.txt");
  fs::remove_all(dir);
}

TEST(Claims, FailingClaimIsReported) {
  atlas::GadgetSpec spec{"star", {{"n", 4}}, "", {{"kappa", atlas::Relation::eq, Rational(5)}}};
  auto results = atlas::evaluate_claims(atlas::star(4).graph, spec, atlas::Limits{});
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].status, atlas::ClaimStatus::fail);
  EXPECT_EQ(*results[0].actual, Rational(3));
}

}  // namespace
