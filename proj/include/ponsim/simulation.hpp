#pragma once

#include <memory>
#include <vector>

#include "ponsim/engine.hpp"
#include "ponsim/metrics.hpp"
#include "ponsim/network.hpp"
#include "ponsim/orchestration.hpp"
#include "ponsim/random.hpp"
#include "ponsim/scenario.hpp"
#include "ponsim/topology.hpp"
#include "ponsim/virtualization.hpp"
#include "ponsim/workload.hpp"

namespace ponsim {

struct RunResult {
  MetricsLedger ledger;
  RunSummary summary;
  double wall_clock_s = 0.0;
  double peak_memory_mb = 0.0;
};

/// Peak resident set of this process so far, from /proc/self/status (VmHWM).
double process_peak_memory_mb();

/// One end-to-end experiment run: builds the infrastructure, deploys
/// containers at t=0, schedules user arrivals once their application is
/// reachable, and drives every task through broker resolution, transfer,
/// execution and response delivery. Single-threaded; distinct Simulation
/// objects are independent and may run on different threads.
class Simulation {
 public:
  Simulation(ScenarioConfig config, std::uint64_t seed);

  /// Runs to the configured horizon and finalizes metrics.
  RunResult run();

  // Introspection surfaces (valid for the object's lifetime).
  Engine& engine() { return engine_; }
  const Topology& topology() const { return topo_; }
  Network& network() { return network_; }
  HostPool& pool() { return pool_; }
  Orchestrator& orchestrator() { return *orch_; }
  MetricsLedger& ledger() { return ledger_; }
  const ScenarioConfig& config() const { return config_; }
  const std::vector<UserProfile>& profiles() const { return profiles_; }

 private:
  void build_profiles();
  void deploy_containers();
  void on_instance_running(InstanceId inst);
  void start_profile(const UserProfile& profile);
  void schedule_next_arrival(int profile_index);
  void spawn_task(const UserProfile& profile);
  void resolve_at_broker(TaskId task, const UserProfile& profile);
  void dispatch(TaskId task, const UserProfile& profile, InstanceId inst);

  ScenarioConfig config_;
  Topology topo_;
  RandomStream rng_;
  MetricsLedger ledger_;
  Engine engine_;
  Network network_;
  HostPool pool_;
  std::unique_ptr<Orchestrator> orch_;
  std::vector<UserProfile> profiles_;
  std::vector<std::vector<NodeId>> devices_per_app_;
  std::vector<bool> app_ready_;
  std::vector<std::unique_ptr<ArrivalGenerator>> generators_;
  TaskId next_task_id_ = 0;
  bool ran_ = false;
};

}  // namespace ponsim
