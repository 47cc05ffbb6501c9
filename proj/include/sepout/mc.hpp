#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "sepout/distribution.hpp"
#include "sepout/error.hpp"
#include "sepout/random.hpp"
#include "sepout/scenario.hpp"

namespace sepout {

/// Monte Carlo run description. Identical (samples, seed, streams) produce
/// bit-identical estimates regardless of thread scheduling: sample index
/// space is partitioned by stream, each stream draws from its own substream
/// of the master seed, and counts are reduced in fixed stream order.
struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0xC0FFEE;
  std::uint32_t streams = 8;
};

inline void validate(const McConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("McConfig: samples must be >= 1");
  if (cfg.streams < 1) throw DomainError("McConfig: streams must be >= 1");
}

/// Indicator-mean estimate with binomial standard error.
struct McEstimate {
  double p_hat;
  double std_error;  // sqrt(p_hat (1 - p_hat) / samples)
  std::uint64_t samples;
};

namespace detail {

// Outage indicator draws, one stream's worth. Draw order per sample is fixed:
// signal first, then every source in declared order.
inline std::uint64_t count_outages(const SignalModel& signal, const Threshold& th,
                                   std::span<const PowerDistribution* const> sources,
                                   RandomStream rng, std::uint64_t n) {
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const double s = rng.exponential(signal.mean_power_mw);
    double interference = 0.0;
    for (const PowerDistribution* d : sources) interference += sample(*d, rng);
    if (s < th.beta_linear * interference) ++hits;
  }
  return hits;
}

inline McEstimate run_indicator_mc(const SignalModel& signal, const Threshold& th,
                                   std::span<const PowerDistribution* const> sources,
                                   const McConfig& cfg) {
  validate(cfg);
  if (sources.empty()) return {0.0, 0.0, cfg.samples};  // S / 0+ is never in outage

  const std::uint64_t streams = cfg.streams;
  const std::uint64_t base = cfg.samples / streams;
  const std::uint64_t remainder = cfg.samples % streams;
  const auto stream_count = [&](std::uint64_t i) { return base + (i < remainder ? 1 : 0); };

  std::vector<std::uint64_t> hits(streams, 0);
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(streams, hardware));

  if (workers <= 1) {
    for (std::uint64_t i = 0; i < streams; ++i) {
      hits[i] = count_outages(signal, th, sources,
                              RandomStream::substream(cfg.seed, i), stream_count(i));
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t i = w; i < streams; i += workers) {
          hits[i] = count_outages(signal, th, sources,
                                  RandomStream::substream(cfg.seed, i),
                                  stream_count(i));
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < streams; ++i) total += hits[i];
  const double p = static_cast<double>(total) / static_cast<double>(cfg.samples);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.samples));
  return {p, se, cfg.samples};
}

}  // namespace detail

/// Direct simulation of the outage event S < beta * sum(I): draw the signal,
/// draw every source of every group, sum, compare (strict inequality).
inline McEstimate estimate_total_outage(const Scenario& sc, const McConfig& cfg) {
  std::vector<const PowerDistribution*> sources;
  for (const auto& g : sc.groups)
    for (const auto& d : g.sources) sources.push_back(&d);
  return detail::run_indicator_mc(sc.signal, sc.threshold, sources, cfg);
}

/// Same, restricted to a single group's summed interference.
inline McEstimate estimate_group_partial(const SignalModel& signal, const Threshold& th,
                                         const InterferenceGroup& g,
                                         const McConfig& cfg) {
  std::vector<const PowerDistribution*> sources;
  sources.reserve(g.sources.size());
  for (const auto& d : g.sources) sources.push_back(&d);
  return detail::run_indicator_mc(signal, th, sources, cfg);
}

}  // namespace sepout
