#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepout/error.hpp"
#include "sepout/scenario.hpp"
#include "sepout/units.hpp"

namespace sepout {

// Scenario file schema (strict: unknown keys are rejected, all powers dBm,
// thresholds dB; conversion to linear happens here and only here):
//
// {
//   "signal":    {"mean_dbm": 0.0},
//   "threshold": {"beta_db": 0.0},
//   "groups": [
//     {"name": "macro", "dependent": false, "sources": [
//       {"type": "exponential",          "mean_dbm": -3.0},
//       {"type": "lognormal_db",         "mu_dbm": 0.0, "sigma_db": 8.0},
//       {"type": "deterministic",        "power_dbm": -10.0},
//       {"type": "lognormal_exp_fading", "mu_dbm": 0.0, "sigma_db": 6.0},
//       {"type": "empirical",            "samples_dbm": [0.0, 1.5, -2.0]}
//     ]}
//   ]
// }

namespace detail {

using json = nlohmann::json;

inline void check_keys(const json& obj, const std::string& path,
                       std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) throw SchemaError(path + "." + item.key(), "unknown key");
  }
}

inline const json& require_key(const json& obj, const std::string& path,
                               const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required key");
  return *it;
}

inline double require_number(const json& obj, const std::string& path,
                             const char* key) {
  const json& v = require_key(obj, path, key);
  if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
  return v.get<double>();
}

inline bool require_bool(const json& obj, const std::string& path, const char* key) {
  const json& v = require_key(obj, path, key);
  if (!v.is_boolean()) throw SchemaError(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

inline std::string require_string(const json& obj, const std::string& path,
                                  const char* key) {
  const json& v = require_key(obj, path, key);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

inline PowerDistribution parse_source(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const std::string type = require_string(j, path, "type");
  try {
    if (type == "exponential") {
      check_keys(j, path, {"type", "mean_dbm"});
      return Exponential(dbm_to_mw(require_number(j, path, "mean_dbm")));
    }
    if (type == "lognormal_db") {
      check_keys(j, path, {"type", "mu_dbm", "sigma_db"});
      return LognormalDb(require_number(j, path, "mu_dbm"),
                         require_number(j, path, "sigma_db"));
    }
    if (type == "deterministic") {
      check_keys(j, path, {"type", "power_dbm"});
      return Deterministic(dbm_to_mw(require_number(j, path, "power_dbm")));
    }
    if (type == "lognormal_exp_fading") {
      check_keys(j, path, {"type", "mu_dbm", "sigma_db"});
      return LognormalTimesExpFading(require_number(j, path, "mu_dbm"),
                                     require_number(j, path, "sigma_db"));
    }
    if (type == "empirical") {
      check_keys(j, path, {"type", "samples_dbm"});
      const json& arr = require_key(j, path, "samples_dbm");
      if (!arr.is_array() || arr.empty())
        throw SchemaError(path + ".samples_dbm", "expected a nonempty array");
      std::vector<double> samples;
      samples.reserve(arr.size());
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number())
          throw SchemaError(path + ".samples_dbm[" + std::to_string(i) + "]",
                            "expected a number");
        samples.push_back(dbm_to_mw(arr[i].get<double>()));
      }
      return Empirical(std::move(samples));
    }
  } catch (const DomainError& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path + ".type", "unknown source type '" + type + "'");
}

}  // namespace detail

/// Builds a Scenario from parsed JSON. Throws SchemaError naming the key path
/// on any violation.
inline Scenario scenario_from_json(const nlohmann::json& j) {
  using detail::json;
  if (!j.is_object()) throw SchemaError("$", "expected a JSON object");
  detail::check_keys(j, "$", {"signal", "threshold", "groups"});

  const json& signal = detail::require_key(j, "$", "signal");
  if (!signal.is_object()) throw SchemaError("$.signal", "expected an object");
  detail::check_keys(signal, "$.signal", {"mean_dbm"});
  const double mean_dbm = detail::require_number(signal, "$.signal", "mean_dbm");

  const json& threshold = detail::require_key(j, "$", "threshold");
  if (!threshold.is_object()) throw SchemaError("$.threshold", "expected an object");
  detail::check_keys(threshold, "$.threshold", {"beta_db"});
  const double beta_db = detail::require_number(threshold, "$.threshold", "beta_db");

  const json& groups = detail::require_key(j, "$", "groups");
  if (!groups.is_array()) throw SchemaError("$.groups", "expected an array");

  std::vector<InterferenceGroup> parsed;
  parsed.reserve(groups.size());
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::string gpath = "$.groups[" + std::to_string(gi) + "]";
    const json& g = groups[gi];
    if (!g.is_object()) throw SchemaError(gpath, "expected an object");
    detail::check_keys(g, gpath, {"name", "dependent", "sources"});
    const std::string name = detail::require_string(g, gpath, "name");
    const bool dependent = detail::require_bool(g, gpath, "dependent");
    const json& sources = detail::require_key(g, gpath, "sources");
    if (!sources.is_array() || sources.empty())
      throw SchemaError(gpath + ".sources", "expected a nonempty array");
    std::vector<PowerDistribution> dists;
    dists.reserve(sources.size());
    for (std::size_t si = 0; si < sources.size(); ++si) {
      dists.push_back(detail::parse_source(
          sources[si], gpath + ".sources[" + std::to_string(si) + "]"));
    }
    parsed.emplace_back(name, std::move(dists), dependent);
  }

  try {
    return Scenario(SignalModel(dbm_to_mw(mean_dbm)), Threshold(db_to_linear(beta_db)),
                    std::move(parsed));
  } catch (const DomainError& e) {
    throw SchemaError("$", e.what());
  }
}

/// Parses scenario JSON text. Syntax errors surface as SchemaError carrying
/// the parser's line/column diagnostics.
inline Scenario parse_scenario(const std::string& text,
                               const std::string& origin = "<string>") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(origin, e.what());
  }
  return scenario_from_json(j);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

}  // namespace sepout
