#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "atlas/classic.hpp"
#include "atlas/highway.hpp"

namespace atlas {

// Instance caps for every exact solver plus run-time settings. Loaded from
// a JSON object whose keys match the field names; missing keys keep defaults.
struct Limits {
  std::size_t skeleton_brute = 64;
  std::size_t catalog = 40;
  std::size_t hd1 = 24;
  std::size_t hd2 = 24;
  std::size_t hd3 = 16;
  std::size_t ml = 20;
  std::size_t bw = 14;
  std::size_t pw = 18;
  std::size_t tw = 18;
  std::size_t dl = 20;
  std::size_t ddim = 16;
  std::size_t vc = 24;
  std::size_t kcenter = 18;
  std::size_t hitting_family = 5000;
  std::chrono::milliseconds timeout{60000};
  unsigned jobs = 1;

  HighwayCaps highway() const;
  ClassicCaps classic() const;
};

void to_json(nlohmann::json& j, const Limits& l);
void from_json(const nlohmann::json& j, Limits& l);

Limits load_limits(const std::string& path);

}  // namespace atlas
