#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sepout/error.hpp"
#include "sepout/quadrature.hpp"
#include "sepout/random.hpp"
#include "sepout/units.hpp"

namespace sepout {

namespace detail {

inline void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

}  // namespace detail

/// One received interference power, exponentially distributed (Rayleigh-faded
/// source). Parameterized by its mean in linear milliwatts.
struct Exponential {
  double mean_mw;

  explicit Exponential(double mean) : mean_mw(mean) {
    detail::require(std::isfinite(mean_mw) && mean_mw > 0.0,
                    "Exponential: mean_mw must be positive and finite");
  }
};

/// Lognormally shadowed power: the dB value is Gaussian with mean mu_dbm and
/// standard deviation sigma_db. sigma_db = 0 degenerates to a point mass.
struct LognormalDb {
  double mu_dbm;
  double sigma_db;

  LognormalDb(double mu, double sigma) : mu_dbm(mu), sigma_db(sigma) {
    detail::require(std::isfinite(mu_dbm), "LognormalDb: mu_dbm must be finite");
    detail::require(std::isfinite(sigma_db) && sigma_db >= 0.0,
                    "LognormalDb: sigma_db must be nonnegative and finite");
  }
};

/// Constant power, e.g. thermal noise folded in as one more source.
struct Deterministic {
  double power_mw;

  explicit Deterministic(double power) : power_mw(power) {
    detail::require(std::isfinite(power_mw) && power_mw >= 0.0,
                    "Deterministic: power_mw must be nonnegative and finite");
  }
};

/// Lognormal local mean multiplied by independent unit-mean exponential
/// fading (shadowing plus small-scale fading on the same source).
struct LognormalTimesExpFading {
  double mu_dbm;
  double sigma_db;

  LognormalTimesExpFading(double mu, double sigma) : mu_dbm(mu), sigma_db(sigma) {
    detail::require(std::isfinite(mu_dbm),
                    "LognormalTimesExpFading: mu_dbm must be finite");
    detail::require(std::isfinite(sigma_db) && sigma_db >= 0.0,
                    "LognormalTimesExpFading: sigma_db must be nonnegative and finite");
  }
};

/// Plug-in distribution over measured powers; sampling and transforms use the
/// raw samples with no smoothing.
struct Empirical {
  std::vector<double> samples_mw;

  explicit Empirical(std::vector<double> samples) : samples_mw(std::move(samples)) {
    detail::require(!samples_mw.empty(), "Empirical: samples_mw must be nonempty");
    for (const double x : samples_mw) {
      detail::require(std::isfinite(x) && x >= 0.0,
                      "Empirical: samples must be nonnegative and finite");
    }
  }
};

using PowerDistribution = std::variant<Exponential, LognormalDb, Deterministic,
                                       LognormalTimesExpFading, Empirical>;

/// One draw of received power in mW. Draw counts per call are fixed per
/// variant, so streams stay aligned across runs.
inline double sample(const PowerDistribution& d, RandomStream& rng) {
  return std::visit(
      [&rng](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return rng.exponential(v.mean_mw);
        } else if constexpr (std::is_same_v<T, LognormalDb>) {
          return dbm_to_mw(v.mu_dbm + v.sigma_db * rng.normal());
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return v.power_mw;
        } else if constexpr (std::is_same_v<T, LognormalTimesExpFading>) {
          const double local_mean = dbm_to_mw(v.mu_dbm + v.sigma_db * rng.normal());
          return local_mean * rng.exponential(1.0);
        } else {
          static_assert(std::is_same_v<T, Empirical>);
          const auto n = v.samples_mw.size();
          auto idx = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(n));
          if (idx >= n) idx = n - 1;  // guards the u -> 1 rounding corner
          return v.samples_mw[idx];
        }
      },
      d);
}

namespace detail {

// E[exp(-s I)] or, with complement set, E[1 - exp(-s I)]. The complement is
// evaluated term-by-term with expm1 so tiny partial outages keep full
// relative accuracy instead of cancelling against 1.
inline double laplace_impl(const PowerDistribution& d, double s,
                           const QuadratureSpec& q, bool complement) {
  require(std::isfinite(s) && s >= 0.0, "laplace: s must be nonnegative and finite");
  validate(q);
  if (s == 0.0) return complement ? 0.0 : 1.0;

  const auto direct = [complement](double t) {
    return complement ? -std::expm1(-t) : std::exp(-t);
  };

  // The integrand lies in [0,1]; quadrature round-off (weights sum to
  // sqrt(pi) only to machine precision) may overshoot by an ulp, so the
  // final expectation is clamped back into range.
  const double value = std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          const double sm = s * v.mean_mw;
          return complement ? sm / (1.0 + sm) : 1.0 / (1.0 + sm);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return direct(s * v.power_mw);
        } else if constexpr (std::is_same_v<T, LognormalDb>) {
          if (v.sigma_db == 0.0) return direct(s * dbm_to_mw(v.mu_dbm));
          const double m_ln = kLn10Over10 * v.mu_dbm;
          const double s_ln = kLn10Over10 * v.sigma_db;
          const auto eval = [&](int n) {
            const GaussHermiteRule& rule = gauss_hermite(n);
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
              const double power =
                  std::exp(m_ln + s_ln * std::numbers::sqrt2 * rule.points[i]);
              acc += rule.weights[i] * direct(s * power);
            }
            return acc / std::sqrt(std::numbers::pi);
          };
          return refine_quadrature(q, eval, "laplace(LognormalDb)");
        } else if constexpr (std::is_same_v<T, LognormalTimesExpFading>) {
          // Conditioned on the local mean L, the fading integrates to
          // 1/(1 + sL); the remaining expectation over L is lognormal.
          if (v.sigma_db == 0.0) {
            const double t = s * dbm_to_mw(v.mu_dbm);
            return complement ? t / (1.0 + t) : 1.0 / (1.0 + t);
          }
          const double m_ln = kLn10Over10 * v.mu_dbm;
          const double s_ln = kLn10Over10 * v.sigma_db;
          const auto eval = [&](int n) {
            const GaussHermiteRule& rule = gauss_hermite(n);
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
              const double t =
                  s * std::exp(m_ln + s_ln * std::numbers::sqrt2 * rule.points[i]);
              const double term =
                  complement ? (std::isinf(t) ? 1.0 : t / (1.0 + t)) : 1.0 / (1.0 + t);
              acc += rule.weights[i] * term;
            }
            return acc / std::sqrt(std::numbers::pi);
          };
          return refine_quadrature(q, eval, "laplace(LognormalTimesExpFading)");
        } else {
          static_assert(std::is_same_v<T, Empirical>);
          double acc = 0.0;
          for (const double x : v.samples_mw) acc += direct(s * x);
          return acc / static_cast<double>(v.samples_mw.size());
        }
      },
      d);
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace detail

/// Laplace transform E[exp(-s I)] of the power distribution, s in 1/mW.
/// Exponential and Deterministic use closed forms; the lognormal variants use
/// Gauss-Hermite refinement per `q`; Empirical averages over the samples.
inline double laplace(const PowerDistribution& d, double s,
                      const QuadratureSpec& q = {}) {
  return detail::laplace_impl(d, s, q, /*complement=*/false);
}

/// Exact CDF at x for the variants that have one; nullopt for the composite
/// and empirical variants.
inline std::optional<double> cdf_closed_form(const PowerDistribution& d, double x) {
  detail::require(std::isfinite(x) && x >= 0.0,
                  "cdf_closed_form: x must be nonnegative and finite");
  return std::visit(
      [x](const auto& v) -> std::optional<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return -std::expm1(-x / v.mean_mw);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return x >= v.power_mw ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, LognormalDb>) {
          if (x == 0.0) return 0.0;
          if (v.sigma_db == 0.0) return x >= dbm_to_mw(v.mu_dbm) ? 1.0 : 0.0;
          const double t = (mw_to_dbm(x) - v.mu_dbm) / v.sigma_db;
          return 0.5 * std::erfc(-t / std::numbers::sqrt2);
        } else {
          return std::nullopt;
        }
      },
      d);
}

}  // namespace sepout
