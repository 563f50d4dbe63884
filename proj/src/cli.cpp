#include "ponsim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "ponsim/harness.hpp"
#include "ponsim/scenario.hpp"

namespace ponsim {

namespace {

struct CommonOpts {
  std::string scenario_path;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::string deployment;
  std::string placement;
  std::string offloading;
  std::string out_path;
  std::optional<double> duration_min;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--scenario", o.scenario_path, "Scenario file (JSON)");
  cmd->add_option("--preset", o.preset,
                  "Built-in scenario: S1..S5 or mixed");
  cmd->add_option("--seed", o.seed, "Root RNG seed");
  cmd->add_option("--reps", o.reps, "Replications (seeds seed..seed+n-1)");
  cmd->add_option("--deployment", o.deployment,
                  "edge_only or far_edge_plus_edge");
  cmd->add_option("--placement", o.placement,
                  "Placement policy, e.g. trade_off:standard");
  cmd->add_option("--offloading", o.offloading,
                  "Offloading policy, e.g. best_delay:dynamic");
  cmd->add_option("--out", o.out_path, "Output CSV path (default: stdout)");
  cmd->add_option("--duration-min", o.duration_min,
                  "Simulated duration in minutes");
  cmd->add_option("--threads", o.threads, "Worker threads for sweeps");
}

ScenarioConfig load_config(const CommonOpts& o) {
  if (o.scenario_path.empty() == o.preset.empty())
    throw ConfigError("exactly one of --scenario or --preset is required");
  ScenarioConfig cfg = o.preset.empty() ? parse_scenario(o.scenario_path)
                                        : build_preset(o.preset);
  if (o.seed) cfg.seed = *o.seed;
  if (o.reps) cfg.replication_count = *o.reps;
  if (!o.deployment.empty())
    cfg.deployment_model = parse_deployment_model(o.deployment);
  if (!o.placement.empty()) cfg.policy.set_placement(o.placement);
  if (!o.offloading.empty()) cfg.policy.set_offloading(o.offloading);
  if (o.duration_min) cfg.duration_s = *o.duration_min * 60.0;
  return cfg;
}

/// The effective config (all defaults materialized) goes next to the CSV,
/// or to stderr when results go to stdout.
void emit_artifacts(const CommonOpts& o, const ScenarioConfig& cfg,
                    const std::vector<ResultRow>& rows, bool timing) {
  std::string echo = effective_config_json(cfg);
  if (o.out_path.empty()) {
    std::cerr << echo;
    std::cout << to_csv(rows, timing);
  } else {
    write_csv(o.out_path, rows, timing);
    std::ofstream cfg_out(o.out_path + ".effective.json", std::ios::binary);
    if (!cfg_out)
      throw std::runtime_error("cannot write " + o.out_path +
                               ".effective.json");
    cfg_out << echo;
  }
}

int dispatch(const std::string& verb, const CommonOpts& o,
             const std::vector<double>& mips, const std::string& axis,
             const std::vector<int>& values) {
  ScenarioConfig cfg = load_config(o);
  int reps = cfg.replication_count;

  if (verb == "run") {
    emit_artifacts(o, cfg, run_single(cfg, reps), false);
  } else if (verb == "grid") {
    std::vector<DeploymentModel> models;
    if (o.deployment.empty())
      models = {DeploymentModel::EdgeOnly, DeploymentModel::FarEdgePlusEdge};
    else
      models = {cfg.deployment_model};
    emit_artifacts(o, cfg,
                   run_policy_grid(cfg, models, reps, o.threads, o.placement,
                                   o.offloading),
                   false);
  } else if (verb == "capacity") {
    if (mips.empty()) throw ConfigError("capacity requires --mips values");
    if (cfg.applications.size() != 1)
      throw ConfigError("capacity requires a single-application scenario");
    emit_artifacts(o, cfg, run_capacity_sweep(cfg, mips, reps, o.threads),
                   false);
  } else if (verb == "scale") {
    if (values.empty()) throw ConfigError("scale requires --values");
    emit_artifacts(o, cfg,
                   run_scalability(cfg, axis, values, reps, o.threads), true);
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"PON edge-computing experiment runner"};
  app.require_subcommand(1);

  CommonOpts run_o, grid_o, cap_o, scale_o;
  std::vector<double> mips;
  std::string axis = "users";
  std::vector<int> values;

  CLI::App* run_cmd = app.add_subcommand("run", "Single scenario run(s)");
  add_common(run_cmd, run_o);
  CLI::App* grid_cmd =
      app.add_subcommand("grid", "Placement x offloading policy grid");
  add_common(grid_cmd, grid_o);
  CLI::App* cap_cmd =
      app.add_subcommand("capacity", "Edge-capacity (MIPS) sweep");
  add_common(cap_cmd, cap_o);
  cap_cmd->add_option("--mips", mips, "Per-core MIPS values to sweep");
  CLI::App* scale_cmd = app.add_subcommand("scale", "Scalability sweep");
  add_common(scale_cmd, scale_o);
  scale_cmd->add_option("--axis", axis, "olts or users");
  scale_cmd->add_option("--values", values, "Axis values to sweep");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return dispatch("run", run_o, mips, axis, values);
    if (grid_cmd->parsed())
      return dispatch("grid", grid_o, mips, axis, values);
    if (cap_cmd->parsed())
      return dispatch("capacity", cap_o, mips, axis, values);
    return dispatch("scale", scale_o, mips, axis, values);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace ponsim
