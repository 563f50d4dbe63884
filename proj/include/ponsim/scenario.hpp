#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ponsim/orchestration.hpp"
#include "ponsim/topology.hpp"
#include "ponsim/workload.hpp"

namespace ponsim {

/// Auto-generation rules for user profiles (one device per user).
struct WorkloadRules {
  /// Draw each profile's start offset uniformly within its mean task gap,
  /// from the profile's own seed substream.
  bool stagger_starts = true;
  double active_duration_s = 0.0;  // 0 = always active
  double idle_duration_s = 0.0;
};

/// Complete description of one experiment. Schema-validated when parsed
/// from a file; unknown keys are rejected.
struct ScenarioConfig {
  std::string name = "custom";
  TopologySpec topology;
  std::vector<ApplicationSpec> applications;
  /// Explicit profiles; empty means auto-generate one per user per app.
  std::vector<UserProfile> profiles;
  WorkloadRules workload;
  PolicyConfig policy;
  DeploymentModel deployment_model = DeploymentModel::EdgeOnly;
  double duration_s = 18000.0;  // 300 simulated minutes
  std::uint64_t seed = 1;
  int replication_count = 1;
  /// Optional per-node queue cap; exceeding it fails the task immediately.
  int queue_cap = 0;  // 0 = unbounded

  /// Total users across applications.
  int total_users() const;
};

/// Parse / serialize the JSON scenario format. Parsing validates the schema
/// (types, ranges, unknown keys) and materializes every default so the
/// echoed form is self-contained. Errors throw ConfigError.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScenarioConfig parse_scenario(const std::string& path);
ScenarioConfig parse_scenario_text(const std::string& json_text);
std::string effective_config_json(const ScenarioConfig& config);

/// Built-in presets: S1..S5 single-application capacity scenarios on a
/// single 8-core OLT with four 2-core VMs, and "mixed" combining all five
/// on the 3-OLT / 298-ONT policy-comparison infrastructure.
ScenarioConfig build_preset(const std::string& name);
bool is_preset_name(const std::string& name);

/// The five applications (smart city, e-health, smart building, sports
/// streaming, video gaming) with their workload parameters; `user_scale`
/// rescales user counts (minimum one user per app).
std::vector<ApplicationSpec> baseline_applications(double user_scale = 1.0);

}  // namespace ponsim
