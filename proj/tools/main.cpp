// sepout - outage probability of a Rayleigh-faded link under independent
// interference, computed by separation into per-source partial outages.
//
// Subcommands:
//   compute  total and per-group outage of a scenario file
//   verify   analytic total vs a joint Monte Carlo run (separability check)
//   sweep    outage-vs-threshold CSV over a beta range
//   budget   spectrum-sharing outage budgets
//
// Exit codes: 0 ok, 2 input error, 3 computation error, 4 verification
// failure, 5 infeasible budget. Outputs are pure functions of the inputs:
// the Monte Carlo seed defaults to the fixed constant 0xC0FFEE.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepout/sepout.hpp"

namespace {

constexpr std::uint32_t kCliStreams = 8;
constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
constexpr std::uint64_t kDefaultSamples = 1'000'000;

// Probabilities are reported with 6 significant digits.
std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// CSV cells use the shortest representation that round-trips.
std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct ComputeArgs {
  std::string scenario_path;
  int quad_nodes = 64;
  std::uint64_t mc_samples = kDefaultSamples;
  std::uint64_t mc_seed = kDefaultSeed;
  std::string out_csv;
};

struct VerifyArgs {
  std::string scenario_path;
  std::uint64_t mc_samples = kDefaultSamples;
  std::uint64_t mc_seed = kDefaultSeed;
  double sigma_tolerance = 4.0;
};

struct SweepArgs {
  std::string scenario_path;
  double beta_db_min = 0.0;
  double beta_db_max = 0.0;
  int steps = 0;
  std::string out_csv;
};

struct BudgetArgs {
  std::optional<double> eps_primary;
  std::optional<double> eps_target;
  std::optional<double> eps_target_group;
  std::optional<int> n;
};

int run_compute(const ComputeArgs& args) {
  const sepout::Scenario sc = sepout::load_scenario(args.scenario_path);
  const sepout::QuadratureSpec quad{args.quad_nodes, 1e-9};
  const sepout::McConfig oracle{args.mc_samples, args.mc_seed, kCliStreams};
  const sepout::OutageResult result = sepout::total_outage(sc, quad, oracle);

  std::cout << "scenario: " << args.scenario_path << "\n";
  for (const auto& p : result.partials) {
    std::cout << "group " << p.group << ": partial " << fmt6(p.probability) << " ["
              << sepout::to_string(p.method) << "]\n";
  }
  std::cout << "total outage: " << fmt6(result.total) << "\n";
  if (result.stderr_total)
    std::cout << "stderr(total): " << fmt6(*result.stderr_total) << "\n";

  if (!args.out_csv.empty()) {
    std::ofstream out(args.out_csv);
    if (!out) throw sepout::DomainError("cannot open output CSV: " + args.out_csv);
    out << "name,partial_outage,method\n";
    for (const auto& p : result.partials)
      out << p.group << "," << shortest(p.probability) << ","
          << sepout::to_string(p.method) << "\n";
    out << "total," << shortest(result.total) << ",composed\n";
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const sepout::Scenario sc = sepout::load_scenario(args.scenario_path);
  if (!(args.sigma_tolerance > 0.0))
    throw sepout::DomainError("--sigma-tolerance must be positive");

  const sepout::OutageResult analytic = sepout::total_outage(sc);
  const sepout::McConfig cfg{args.mc_samples, args.mc_seed, kCliStreams};
  const sepout::McEstimate mc = sepout::estimate_total_outage(sc, cfg);

  const double diff = std::abs(analytic.total - mc.p_hat);
  const bool pass = diff <= args.sigma_tolerance * mc.std_error;
  const double sigmas = mc.std_error > 0.0 ? diff / mc.std_error : 0.0;

  std::cout << "scenario: " << args.scenario_path << "\n";
  std::cout << "analytic total: " << fmt6(analytic.total) << "\n";
  std::cout << "monte carlo estimate: " << fmt6(mc.p_hat) << " (stderr "
            << fmt6(mc.std_error) << ", samples " << mc.samples << ", seed "
            << args.mc_seed << ")\n";
  std::cout << "difference: " << fmt6(diff) << " (" << fmt6(sigmas)
            << " sigma, tolerance " << fmt6(args.sigma_tolerance) << ")\n";
  std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 4;
}

int run_sweep(const SweepArgs& args) {
  if (!(args.beta_db_min < args.beta_db_max))
    throw sepout::DomainError("--beta-db-min must be below --beta-db-max");
  if (args.steps < 2) throw sepout::DomainError("--steps must be >= 2");

  const sepout::Scenario base = sepout::load_scenario(args.scenario_path);
  std::ofstream out(args.out_csv);
  if (!out) throw sepout::DomainError("cannot open output CSV: " + args.out_csv);

  out << "beta_db,total_outage";
  for (const auto& g : base.groups) out << "," << g.name;
  out << "\n";

  const sepout::McConfig oracle{kDefaultSamples, kDefaultSeed, kCliStreams};
  for (int i = 0; i < args.steps; ++i) {
    const double beta_db =
        args.beta_db_min +
        (args.beta_db_max - args.beta_db_min) * i / (args.steps - 1);
    const sepout::Scenario sc(base.signal,
                              sepout::Threshold(sepout::db_to_linear(beta_db)),
                              base.groups);
    const sepout::OutageResult r = sepout::total_outage(sc, {}, oracle);
    out << shortest(beta_db) << "," << shortest(r.total);
    for (const auto& p : r.partials) out << "," << shortest(p.probability);
    out << "\n";
  }
  std::cout << "wrote " << args.out_csv << " (" << args.steps << " rows)\n";
  return 0;
}

int run_budget(const BudgetArgs& args) {
  const bool pair_mode = args.eps_primary.has_value() || args.eps_target.has_value();
  const bool group_mode = args.eps_target_group.has_value() || args.n.has_value();
  if (pair_mode == group_mode) {
    throw sepout::DomainError(
        "budget needs either --eps-primary with --eps-target, or "
        "--eps-target-group with --n");
  }
  if (pair_mode) {
    if (!args.eps_primary || !args.eps_target)
      throw sepout::DomainError("budget needs both --eps-primary and --eps-target");
    const double budget = sepout::secondary_budget(*args.eps_primary, *args.eps_target);
    std::cout << "secondary outage budget: " << fmt6(budget) << "\n";
  } else {
    if (!args.eps_target_group || !args.n)
      throw sepout::DomainError("budget needs both --eps-target-group and --n");
    const double budget = sepout::per_source_budget(*args.eps_target_group, *args.n);
    std::cout << "per-source outage budget: " << fmt6(budget) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"outage analysis for a Rayleigh-faded link under independent "
               "interference sources"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "total and per-group outage of a scenario file");
  compute->add_option("scenario", compute_args.scenario_path, "scenario JSON file")
      ->required();
  compute->add_option("--quad-nodes", compute_args.quad_nodes,
                      "starting Gauss-Hermite node count")->capture_default_str();
  compute->add_option("--mc-samples", compute_args.mc_samples,
                      "Monte Carlo samples for dependent groups")->capture_default_str();
  compute->add_option("--mc-seed", compute_args.mc_seed, "Monte Carlo seed")->capture_default_str();
  compute->add_option("--out-csv", compute_args.out_csv, "also write partials CSV");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the analytic total against a joint Monte Carlo run");
  verify->add_option("scenario", verify_args.scenario_path, "scenario JSON file")
      ->required();
  verify->add_option("--mc-samples", verify_args.mc_samples, "Monte Carlo samples")->capture_default_str();
  verify->add_option("--mc-seed", verify_args.mc_seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--sigma-tolerance", verify_args.sigma_tolerance,
                     "pass threshold in standard errors")->capture_default_str();

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "outage-vs-threshold CSV over a beta range");
  sweep->add_option("scenario", sweep_args.scenario_path, "scenario JSON file")
      ->required();
  sweep->add_option("--beta-db-min", sweep_args.beta_db_min, "range start, dB")
      ->required();
  sweep->add_option("--beta-db-max", sweep_args.beta_db_max, "range end, dB")
      ->required();
  sweep->add_option("--steps", sweep_args.steps, "number of rows (>= 2)")->required();
  sweep->add_option("--out-csv", sweep_args.out_csv, "output CSV path")->required();

  BudgetArgs budget_args;
  CLI::App* budget = app.add_subcommand("budget", "spectrum-sharing outage budgets");
  budget->add_option("--eps-primary", budget_args.eps_primary,
                     "outage from primary co-channel interference alone");
  budget->add_option("--eps-target", budget_args.eps_target,
                     "maximum allowed total outage");
  budget->add_option("--eps-target-group", budget_args.eps_target_group,
                     "outage target for a group of identical sources");
  budget->add_option("--n", budget_args.n, "number of identical sources");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) return run_compute(compute_args);
    if (*verify) return run_verify(verify_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*budget) return run_budget(budget_args);
  } catch (const sepout::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const sepout::InfeasibleBudget& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 5;
  } catch (const sepout::DegeneratePrimary& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 5;
  } catch (const sepout::NonConvergence& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const sepout::MissingOracle& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const sepout::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const sepout::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
