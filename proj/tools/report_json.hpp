#pragma once

// JSON form of suite reports:
//   {suite, config, checks: [{name, status, witness?, millis}], total_millis}

#include <json.hpp>

#include "hspecht/suites.hpp"

namespace hspecht::tool {

inline nlohmann::ordered_json config_json(const SuiteConfig& cfg, int degree) {
  nlohmann::ordered_json j;
  j["suite"] = cfg.suite;
  j["r"] = cfg.r;
  j["n"] = cfg.n;
  j["degree"] = degree;
  j["c_short"] = cfg.c_short.get_str();
  j["c_long"] = cfg.c_long.get_str();
  j["seed"] = cfg.seed;
  return j;
}

/// With timing off every millis field is 0, so equal inputs give equal bytes.
inline nlohmann::ordered_json report_json(const SuiteReport& rep, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = rep.suite;
  j["config"] = config_json(rep.config, rep.degree);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    if (!c.witness.empty()) cj["witness"] = c.witness;
    cj["millis"] = timing ? c.millis : 0.0;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["total_millis"] = timing ? rep.total_millis : 0.0;
  return j;
}

}  // namespace hspecht::tool
