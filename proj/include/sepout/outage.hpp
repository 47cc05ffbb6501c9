#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "sepout/distribution.hpp"
#include "sepout/error.hpp"
#include "sepout/mc.hpp"
#include "sepout/quadrature.hpp"
#include "sepout/scenario.hpp"

namespace sepout {

/// Outage that a single source would cause on its own against the
/// Rayleigh-faded signal: with S exponential of mean omega and threshold
/// beta, P(S < beta I) = 1 - E[exp(-(beta/omega) I)], i.e. one minus the
/// source's Laplace transform at s = beta/omega. Exact for any source
/// distribution; no sum distribution is ever formed.
inline double partial_outage(const SignalModel& signal, const Threshold& th,
                             const PowerDistribution& d,
                             const QuadratureSpec& q = {}) {
  const double s = th.beta_linear / signal.mean_power_mw;
  return detail::laplace_impl(d, s, q, /*complement=*/true);
}

/// Partial outage for a lognormally shadowed interferer (the Suzuki case:
/// Rayleigh signal amplitude against a lognormal power). Alias of
/// partial_outage with a LognormalDb source - same code path, same bits.
inline double partial_outage_suzuki(const SignalModel& signal, const Threshold& th,
                                    double mu_dbm, double sigma_db,
                                    const QuadratureSpec& q = {}) {
  return partial_outage(signal, th, LognormalDb(mu_dbm, sigma_db), q);
}

/// Total outage from independent partial outages: 1 - prod(1 - eps_i),
/// accumulated as sum(log1p(-eps_i)) so thousands of tiny partials survive
/// without underflow. Empty input composes to 0; any partial equal to 1
/// forces the result to exactly 1.
inline double compose(std::span<const double> partials) {
  double log_complement = 0.0;
  for (const double eps : partials) {
    detail::require(std::isfinite(eps) && eps >= 0.0 && eps <= 1.0,
                    "compose: partial outages must be in [0,1]");
    if (eps == 1.0) return 1.0;
    log_complement += std::log1p(-eps);
  }
  return -std::expm1(log_complement) + 0.0;  // +0.0 normalizes the empty case's -0
}

inline double compose(std::initializer_list<double> partials) {
  return compose(std::span<const double>(partials.begin(), partials.size()));
}

namespace detail {

inline MethodTag classify(const PowerDistribution& d) {
  if (std::holds_alternative<LognormalDb>(d) ||
      std::holds_alternative<LognormalTimesExpFading>(d)) {
    return MethodTag::quadrature;
  }
  if (std::holds_alternative<Empirical>(d)) return MethodTag::empirical;
  return MethodTag::closed_form;
}

inline MethodTag classify(const std::vector<PowerDistribution>& sources) {
  MethodTag tag = MethodTag::closed_form;
  for (const auto& d : sources) {
    const MethodTag t = classify(d);
    if (t == MethodTag::quadrature) return MethodTag::quadrature;
    if (t == MethodTag::empirical) tag = MethodTag::empirical;
  }
  return tag;
}

}  // namespace detail

/// Total outage of a scenario. Non-dependent groups are evaluated source by
/// source via partial_outage and composed; dependent groups come from their
/// supplied partial or a joint Monte Carlo of the group sum (one derived
/// seed per group index, so results do not depend on evaluation order).
inline OutageResult total_outage(const Scenario& sc, const QuadratureSpec& q = {},
                                 const std::optional<McConfig>& joint_oracle = {}) {
  validate(q);
  OutageResult result;
  result.partials.reserve(sc.groups.size());
  std::vector<double> eps(sc.groups.size());
  std::vector<double> mc_stderr(sc.groups.size(), 0.0);
  bool any_mc = false;

  for (std::size_t gi = 0; gi < sc.groups.size(); ++gi) {
    const InterferenceGroup& g = sc.groups[gi];
    double p = 0.0;
    MethodTag tag = MethodTag::closed_form;
    if (g.supplied_partial) {
      p = *g.supplied_partial;
      tag = MethodTag::supplied;
    } else if (!g.dependent) {
      std::vector<double> per_source;
      per_source.reserve(g.sources.size());
      for (const auto& d : g.sources)
        per_source.push_back(partial_outage(sc.signal, sc.threshold, d, q));
      p = compose(per_source);
      tag = detail::classify(g.sources);
    } else {
      if (!joint_oracle) {
        throw MissingOracle("group '" + g.name +
                            "' is dependent and has neither a supplied partial nor "
                            "a Monte Carlo configuration");
      }
      McConfig cfg = *joint_oracle;
      cfg.seed = RandomStream::derive_seed(cfg.seed, gi);
      const McEstimate est = estimate_group_partial(sc.signal, sc.threshold, g, cfg);
      p = est.p_hat;
      mc_stderr[gi] = est.std_error;
      tag = MethodTag::monte_carlo;
      any_mc = true;
    }
    eps[gi] = p;
    result.partials.push_back({g.name, p, tag});
  }

  result.total = compose(eps);
  if (any_mc) {
    // Delta method: d total / d eps_g = prod_{h != g} (1 - eps_h).
    double variance = 0.0;
    for (std::size_t gi = 0; gi < sc.groups.size(); ++gi) {
      if (mc_stderr[gi] == 0.0) continue;
      const double dtotal =
          eps[gi] < 1.0 ? (1.0 - result.total) / (1.0 - eps[gi]) : 0.0;
      variance += dtotal * dtotal * mc_stderr[gi] * mc_stderr[gi];
    }
    result.stderr_total = std::sqrt(variance);
  }
  return result;
}

/// Closed form for the special case where every interferer is itself
/// Rayleigh faded (exponential power):eps = 1 - prod 1/(1 + beta m_i/omega).
/// Kept as an independent reference for the generic path.
inline double total_outage_all_rayleigh(const SignalModel& signal, const Threshold& th,
                                        std::span<const double> interferer_means_mw) {
  double log_complement = 0.0;
  for (const double mean : interferer_means_mw) {
    detail::require(std::isfinite(mean) && mean > 0.0,
                    "total_outage_all_rayleigh: means must be positive and finite");
    log_complement -= std::log1p(th.beta_linear * mean / signal.mean_power_mw);
  }
  return -std::expm1(log_complement) + 0.0;
}

inline double total_outage_all_rayleigh(const SignalModel& signal, const Threshold& th,
                                        std::initializer_list<double> means) {
  return total_outage_all_rayleigh(
      signal, th, std::span<const double>(means.begin(), means.size()));
}

}  // namespace sepout
