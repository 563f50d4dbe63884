#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ponsim/topology.hpp"
#include "ponsim/types.hpp"
#include "ponsim/virtualization.hpp"
#include "ponsim/workload.hpp"

namespace ponsim {

enum class PlacementAlgorithm : std::uint8_t {
  RoundRobin,
  CpuGreedy,
  TradeOff,
  MultiObjective,
};
enum class PlacementVariant : std::uint8_t { Standard, LatencyBased, RateBased };
enum class OffloadAlgorithm : std::uint8_t { RoundRobin, BestLatency, BestDelay };
enum class OffloadMode : std::uint8_t { Static, Dynamic };
enum class DeploymentModel : std::uint8_t { EdgeOnly, FarEdgePlusEdge };

const char* to_string(PlacementAlgorithm a);
const char* to_string(PlacementVariant v);
const char* to_string(OffloadAlgorithm a);
const char* to_string(OffloadMode m);
const char* to_string(DeploymentModel m);

struct MoWeights {
  double w_ram = 1.0;
  double w_storage = 1.0;
  double w_cores = 1.0;
  /// Per-core speed is weighted above the depletable resources so that on
  /// heterogeneous tiers the availability score stays compute-aware.
  double w_mips = 4.0;
};

struct PolicyConfig {
  PlacementAlgorithm placement_algorithm = PlacementAlgorithm::TradeOff;
  PlacementVariant placement_variant = PlacementVariant::Standard;
  OffloadAlgorithm offload_algorithm = OffloadAlgorithm::RoundRobin;
  OffloadMode offload_mode = OffloadMode::Dynamic;
  /// Topology weights t_i: cloud penalized, far edge favoured.
  std::map<NodeKind, double> trade_off_weights = {
      {NodeKind::Cloud, 2.0}, {NodeKind::Olt, 1.0}, {NodeKind::Vm, 1.0},
      {NodeKind::Ont, 0.8}};
  std::map<NodeKind, double> multi_objective_weights = {
      {NodeKind::Cloud, 1.0}, {NodeKind::Olt, 0.25}, {NodeKind::Vm, 0.25},
      {NodeKind::Ont, 0.0}};
  MoWeights mo_weights;
  double broker_lookup_latency_s = 0.001;
  double control_message_kb = 1.0;

  /// "name:variant" / "name:mode" strings, e.g. "trade_off:latency",
  /// "best_delay:dynamic". Throws std::invalid_argument on unknown names.
  static PlacementAlgorithm parse_placement_algorithm(const std::string& s);
  static PlacementVariant parse_placement_variant(const std::string& s);
  static OffloadAlgorithm parse_offload_algorithm(const std::string& s);
  static OffloadMode parse_offload_mode(const std::string& s);
  void set_placement(const std::string& name_colon_variant);
  void set_offloading(const std::string& name_colon_mode);
  std::string placement_string() const;
  std::string offloading_string() const;
};

DeploymentModel parse_deployment_model(const std::string& s);

// ---------------------------------------------------------------------------
// Pure scoring functions. These take plain numbers so tests can enumerate
// them against independent evaluation.

/// Container-per-core pressure F_i = C_i / N_i; minimized.
double score_cpu_greedy(int container_count, int cores);

/// Topology-weighted queueing cost F_i = (2 C_i + 1) * t_i * S_t / MIPS_i;
/// minimized.
double score_trade_off(int container_count, double t_weight,
                       double task_length_mi, double mips_per_core);

/// Availability score, maximized:
///   S_i = sum_R w_R * (R_avail / R_tot) - C_i - t_i
/// over RAM, storage, cores, and per-core MIPS. The MIPS ratio is the
/// node's MIPS normalized by the maximum among candidates (per-core speed
/// is not depletable).
double score_multi_objective(double ram_avail, double ram_tot,
                             double stor_avail, double stor_tot,
                             int cores_avail, int cores_tot, double mips,
                             double mips_max, const MoWeights& w,
                             int container_count, double t_weight);

/// Predicted dispatch delay, minimized:
///   D_i = L_net + (sum_{t in Q_i} S_t / MIPS_i + S_new / MIPS_i) / N_i
double score_best_delay(double net_latency_s, double pending_mi,
                        double new_task_mi, double mips_per_core, int cores);

// ---------------------------------------------------------------------------
// Selection over candidate snapshots (pure; ties break deterministically).

struct PlacementCandidate {
  NodeId node = kInvalidNode;
  int cores = 0;
  double mips = 0.0;
  double ram_avail = 0.0, ram_tot = 0.0;
  double stor_avail = 0.0, stor_tot = 0.0;
  int busy_cores = 0;
  int container_count = 0;
  double t_trade_off = 1.0;
  double t_multi_objective = 0.0;
};

/// Min F = C/N; ties prefer more cores, then lowest node id.
std::size_t select_cpu_greedy(const std::vector<PlacementCandidate>& c);
/// Min trade-off cost; ties by lowest node id.
std::size_t select_trade_off(const std::vector<PlacementCandidate>& c,
                             double task_length_mi);
/// Max availability score; ties by lowest node id.
std::size_t select_multi_objective(const std::vector<PlacementCandidate>& c,
                                   const MoWeights& w);

struct OffloadCandidate {
  InstanceId instance = kInvalidInstance;
  NodeId host = kInvalidNode;
  double net_latency_s = 0.0;
  int assigned_tasks = 0;
  double pending_mi = 0.0;
  double mips = 0.0;
  int cores = 0;
};

/// Min latency; ties by fewest assigned tasks, then lowest instance id.
std::size_t select_best_latency(const std::vector<OffloadCandidate>& c);
/// Min predicted delay; ties by fewest assigned tasks (it extends Best
/// Latency), then lowest instance id.
std::size_t select_best_delay(const std::vector<OffloadCandidate>& c,
                              double new_task_mi);

// ---------------------------------------------------------------------------

/// Broker-side offloading state (one per OLT broker).
struct BrokerState {
  NodeId broker = kInvalidNode;
  /// Static-mode cache: device -> instance.
  std::unordered_map<NodeId, InstanceId> static_bindings;
  /// Per-app round-robin rotation index.
  std::unordered_map<int, std::size_t> rr_cursors;
};

/// Two-plane orchestration: cloud-level container placement and broker-level
/// task offloading. Decision functions read snapshots of host state; all
/// mutation happens through HostPool.
class Orchestrator {
 public:
  Orchestrator(const Topology& topo, HostPool& pool, PolicyConfig policy,
               DeploymentModel deployment,
               const std::vector<ApplicationSpec>* apps,
               const std::vector<std::vector<NodeId>>* devices_per_app);

  /// Execution-capable nodes under the deployment model (edge-only: VMs;
  /// far-edge+edge: VMs then ONTs), in id order.
  const std::vector<NodeId>& placement_universe() const { return universe_; }

  /// Chooses a host node for one container of `app_index`, or nullopt when
  /// no feasible node exists. Does not mutate host state (the caller admits).
  std::optional<NodeId> place(int app_index, SimTime now = 0.0);

  /// Latency-based host preselection (OLTs, plus ONTs under far-edge).
  NodeId select_host_latency(int app_index) const;
  /// Rate-based host preselection.
  NodeId select_host_rate(int app_index) const;

  /// Registers a running instance with every broker directory.
  void register_running(InstanceId inst);
  /// Drops an instance from directories and invalidates static bindings.
  void unregister(InstanceId inst);

  /// Running instances of an app, id order.
  const std::vector<InstanceId>& directory(int app_index) const;

  /// Broker-level replica selection for one task. Private apps resolve to
  /// the device's bound instance. Returns nullopt when no running replica.
  std::optional<InstanceId> offload(NodeId device, int app_index);

  const PolicyConfig& policy() const { return policy_; }
  BrokerState& broker_state(NodeId device);

 private:
  std::vector<NodeId> hosts_in_scope() const;
  std::vector<NodeId> scope_nodes(NodeId host) const;
  std::optional<NodeId> apply_algorithm(const std::vector<NodeId>& scope,
                                        int app_index, SimTime now);
  PlacementCandidate make_candidate(NodeId node, SimTime now) const;
  double mean_latency_for_host(NodeId host, int app_index) const;
  int same_app_copies(NodeId host, int app_index) const;
  int associated_devices(NodeId host) const;
  std::optional<InstanceId> run_offload_algorithm(NodeId device,
                                                  int app_index,
                                                  BrokerState& bs);

  const Topology& topo_;
  HostPool& pool_;
  PolicyConfig policy_;
  DeploymentModel deployment_;
  const std::vector<ApplicationSpec>* apps_;
  const std::vector<std::vector<NodeId>>* devices_per_app_;
  std::vector<NodeId> universe_;
  std::size_t rr_placement_cursor_ = 0;
  std::vector<std::vector<InstanceId>> directory_;  // per app, running only
  std::unordered_map<NodeId, BrokerState> brokers_;
  std::unordered_map<NodeId, InstanceId> private_binding_;  // device -> inst
  static const std::vector<InstanceId> kEmptyDirectory;

 public:
  /// Binds a private instance to its subscriber device.
  void bind_private(NodeId device, InstanceId inst) {
    private_binding_[device] = inst;
  }
};

}  // namespace ponsim
