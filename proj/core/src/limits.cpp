#include "atlas/limits.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "atlas/error.hpp"

namespace atlas {

HighwayCaps Limits::highway() const {
  HighwayCaps c;
  c.hd1 = hd1;
  c.hd2 = hd2;
  c.hd3 = hd3;
  c.catalog = catalog;
  c.hitting_family = hitting_family;
  return c;
}

ClassicCaps Limits::classic() const {
  ClassicCaps c;
  c.max_leaf = ml;
  c.bandwidth = bw;
  c.pathwidth = pw;
  c.treewidth = tw;
  c.linear_forest = dl;
  return c;
}

void to_json(nlohmann::json& j, const Limits& l) {
  j = {{"skeleton_brute", l.skeleton_brute},
       {"catalog", l.catalog},
       {"hd1", l.hd1},
       {"hd2", l.hd2},
       {"hd3", l.hd3},
       {"ml", l.ml},
       {"bw", l.bw},
       {"pw", l.pw},
       {"tw", l.tw},
       {"dl", l.dl},
       {"ddim", l.ddim},
       {"vc", l.vc},
       {"kcenter", l.kcenter},
       {"hitting_family", l.hitting_family},
       {"timeout_ms", l.timeout.count()},
       {"jobs", l.jobs}};
}

void from_json(const nlohmann::json& j, Limits& l) {
  if (!j.is_object()) throw InvalidInput("limits config must be a JSON object");
  auto take = [&](const char* key, std::size_t& field) {
    if (j.contains(key)) field = j.at(key).get<std::size_t>();
  };
  take("skeleton_brute", l.skeleton_brute);
  take("catalog", l.catalog);
  take("hd1", l.hd1);
  take("hd2", l.hd2);
  take("hd3", l.hd3);
  take("ml", l.ml);
  take("bw", l.bw);
  take("pw", l.pw);
  take("tw", l.tw);
  take("dl", l.dl);
  take("ddim", l.ddim);
  take("vc", l.vc);
  take("kcenter", l.kcenter);
  take("hitting_family", l.hitting_family);
  if (j.contains("timeout_ms")) l.timeout = std::chrono::milliseconds(j.at("timeout_ms").get<long>());
  if (j.contains("jobs")) l.jobs = j.at("jobs").get<unsigned>();
}

Limits load_limits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config " + path);
  try {
    return nlohmann::json::parse(in).get<Limits>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("bad config " + path + ": " + e.what());
  }
}

}  // namespace atlas
