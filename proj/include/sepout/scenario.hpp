#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sepout/distribution.hpp"
#include "sepout/error.hpp"

namespace sepout {

/// Mean of the exponentially distributed received signal power (Rayleigh
/// fading), linear milliwatts.
struct SignalModel {
  double mean_power_mw;

  explicit SignalModel(double mean) : mean_power_mw(mean) {
    detail::require(std::isfinite(mean_power_mw) && mean_power_mw > 0.0,
                    "SignalModel: mean_power_mw must be positive and finite");
  }
};

/// Outage threshold on the signal-to-interference power ratio, linear scale.
struct Threshold {
  double beta_linear;

  explicit Threshold(double beta) : beta_linear(beta) {
    detail::require(std::isfinite(beta_linear) && beta_linear > 0.0,
                    "Threshold: beta_linear must be positive and finite");
  }
};

/// Sources that may be mutually dependent. Independence is assumed only
/// across groups; a dependent group is never evaluated source-by-source but
/// through a joint Monte Carlo run or a supplied partial outage.
struct InterferenceGroup {
  std::string name;
  std::vector<PowerDistribution> sources;
  bool dependent = false;
  std::optional<double> supplied_partial;

  InterferenceGroup(std::string name_, std::vector<PowerDistribution> sources_,
                    bool dependent_ = false,
                    std::optional<double> supplied = std::nullopt)
      : name(std::move(name_)),
        sources(std::move(sources_)),
        dependent(dependent_),
        supplied_partial(supplied) {
    detail::require(!sources.empty(), "InterferenceGroup: sources must be nonempty");
    if (supplied_partial) {
      detail::require(std::isfinite(*supplied_partial) && *supplied_partial >= 0.0 &&
                          *supplied_partial <= 1.0,
                      "InterferenceGroup: supplied_partial must be in [0,1]");
    }
  }
};

struct Scenario {
  SignalModel signal;
  Threshold threshold;
  std::vector<InterferenceGroup> groups;  // empty means no interference

  Scenario(SignalModel signal_, Threshold threshold_,
           std::vector<InterferenceGroup> groups_)
      : signal(signal_), threshold(threshold_), groups(std::move(groups_)) {
    std::unordered_set<std::string> names;
    for (const auto& g : groups) {
      detail::require(names.insert(g.name).second,
                      "Scenario: group names must be unique");
    }
  }
};

enum class MethodTag { closed_form, quadrature, empirical, monte_carlo, supplied };

inline const char* to_string(MethodTag tag) {
  switch (tag) {
    case MethodTag::closed_form: return "closed_form";
    case MethodTag::quadrature: return "quadrature";
    case MethodTag::empirical: return "empirical";
    case MethodTag::monte_carlo: return "monte_carlo";
    case MethodTag::supplied: return "supplied";
  }
  return "?";
}

struct GroupPartial {
  std::string group;
  double probability;
  MethodTag method;
};

/// Total outage with its per-group decomposition. stderr_total is present
/// when any group was evaluated by Monte Carlo (delta-method propagation).
struct OutageResult {
  double total;
  std::vector<GroupPartial> partials;
  std::optional<double> stderr_total;
};

}  // namespace sepout
