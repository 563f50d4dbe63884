#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ponsim/scenario.hpp"
#include "ponsim/simulation.hpp"

namespace ponsim {

/// One CSV row: a whole-run aggregate (app == "all") or a per-app slice.
struct ResultRow {
  std::string row_kind = "run";  // "run" or "mean"
  std::string scenario;
  std::string deployment;
  std::string placement;
  std::string offloading;
  std::uint64_t seed = 0;
  int olt_count = 0;
  int users = 0;
  double edge_mips = 0.0;
  std::string app = "all";
  std::uint64_t submitted = 0;
  std::uint64_t success = 0;
  std::uint64_t slo_miss = 0;
  std::uint64_t rejected = 0;
  std::uint64_t in_flight = 0;
  double tsr = NAN;
  double mean_latency_s = NAN;
  double normalized_latency = NAN;
  double energy_j = 0.0;
  std::uint64_t placement_failures = 0;
  double wall_clock_s = 0.0;
  double peak_memory_mb = 0.0;
  std::uint64_t events = 0;
};

RunResult run_once(const ScenarioConfig& config, std::uint64_t seed);

/// Rows for one finished run: the "all" aggregate, then per-app rows when
/// `include_apps`.
std::vector<ResultRow> rows_from_run(const ScenarioConfig& config,
                                     std::uint64_t seed,
                                     const RunResult& result,
                                     bool include_apps = true);

/// `reps` runs with seeds seed, seed+1, ...; per-app breakdown rows per run
/// plus a "mean" aggregate row when reps > 1.
std::vector<ResultRow> run_single(const ScenarioConfig& config, int reps);

/// Every placement (4 algorithms x 3 variants) crossed with every offloading
/// policy (3 algorithms x 2 modes) and each deployment model: 72 combinations
/// per deployment in deterministic order, `reps` seeds each, one aggregate
/// row per run. Non-empty filters keep only matching placement / offloading
/// strings. `threads` > 1 distributes runs over worker threads; row order is
/// grid order regardless.
std::vector<ResultRow> run_policy_grid(
    const ScenarioConfig& config, const std::vector<DeploymentModel>& models,
    int reps, int threads = 1, const std::string& placement_filter = "",
    const std::string& offloading_filter = "");

/// Re-runs the scenario with OLT and VM per-core MIPS set to each value;
/// one aggregate row per run.
std::vector<ResultRow> run_capacity_sweep(const ScenarioConfig& config,
                                          const std::vector<double>& mips,
                                          int reps, int threads = 1);

/// Scalability along "olts" (OLT count; ONTs redistribute) or "users"
/// (total user target; per-app counts rescale proportionally).
std::vector<ResultRow> run_scalability(const ScenarioConfig& config,
                                       const std::string& axis,
                                       const std::vector<int>& values,
                                       int reps, int threads = 1);

/// `include_timing` adds the wall_clock_s / peak_memory_mb columns; they are
/// host-dependent, so only the scalability verb emits them (keeping the
/// other verbs' output byte-reproducible).
std::string to_csv(const std::vector<ResultRow>& rows,
                   bool include_timing = false);
void write_csv(const std::string& path, const std::vector<ResultRow>& rows,
               bool include_timing = false);

/// Rescales per-app user counts so they total `target_users` (each app keeps
/// at least one user); ONT count follows.
ScenarioConfig scale_users(const ScenarioConfig& config, int target_users);

}  // namespace ponsim
