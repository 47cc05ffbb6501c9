#pragma once

#include <cmath>
#include <string>

#include "sepout/error.hpp"

namespace sepout {

namespace detail {

inline void require_probability(double p, const char* name) {
  if (!(std::isfinite(p) && p >= 0.0 && p <= 1.0))
    throw DomainError(std::string(name) + " must be a probability in [0,1]");
}

}  // namespace detail

/// Largest outage the secondary network may add on its own so that the
/// composed total stays at or below eps_target, given the primary network
/// already causes eps_primary by itself: (eps_target - eps_primary) /
/// (1 - eps_primary). Note this exceeds the naive eps_target - eps_primary
/// whenever eps_primary > 0.
inline double secondary_budget(double eps_primary, double eps_target) {
  detail::require_probability(eps_primary, "eps_primary");
  detail::require_probability(eps_target, "eps_target");
  if (eps_primary == 1.0)
    throw DegeneratePrimary("eps_primary = 1: primary link is always in outage");
  if (eps_target < eps_primary)
    throw InfeasibleBudget("eps_target below the primary-only outage: "
                           "no admissible secondary interference");
  return (eps_target - eps_primary) / (1.0 - eps_primary);
}

/// Equal per-source share of a group outage target: the eps such that n
/// independent copies compose back to eps_target_group.
inline double per_source_budget(double eps_target_group, int n) {
  detail::require_probability(eps_target_group, "eps_target_group");
  if (n < 1) throw DomainError("per_source_budget: n must be >= 1");
  if (eps_target_group == 1.0) return 1.0;
  return -std::expm1(std::log1p(-eps_target_group) / n) + 0.0;
}

/// Record of one sharing computation.
struct SharingBudget {
  double eps_primary;
  double eps_target;
  double eps_secondary_max;
};

inline SharingBudget make_sharing_budget(double eps_primary, double eps_target) {
  return {eps_primary, eps_target, secondary_budget(eps_primary, eps_target)};
}

}  // namespace sepout
