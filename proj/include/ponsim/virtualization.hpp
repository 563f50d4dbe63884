#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ponsim/engine.hpp"
#include "ponsim/network.hpp"
#include "ponsim/topology.hpp"
#include "ponsim/types.hpp"

namespace ponsim {

struct ContainerSpec {
  std::string app_id;
  double ram_mb = 512.0;
  double storage_mb = 1024.0;
  double image_size_mb = 10.0;
  bool shared = true;
  int replica_count = 1;
};

enum class InstanceState : std::uint8_t { Transferring, Running, Removed };

struct ContainerInstance {
  InstanceId id = kInvalidInstance;
  int app_index = -1;
  ContainerSpec spec;
  NodeId host = kInvalidNode;
  InstanceState state = InstanceState::Transferring;
  int assigned_task_count = 0;  // dispatched minus finished
  std::vector<NodeId> subscribers;
  bool remove_when_drained = false;
};

/// Per-node mutable execution state: free resources, resident container
/// count and per-core occupancy.
struct NodeState {
  NodeId node = kInvalidNode;
  double available_ram_mb = 0.0;
  double available_storage_mb = 0.0;
  int container_count = 0;
  std::vector<SimTime> core_busy_until;
  /// Total MI of tasks queued or executing here (Q_i of the delay estimate).
  double pending_mi = 0.0;
  int pending_tasks = 0;
  double busy_core_seconds = 0.0;  // accumulated, for energy accounting

  int busy_cores(SimTime now) const {
    int n = 0;
    for (SimTime t : core_busy_until)
      if (t > now) ++n;
    return n;
  }
};

/// Container lifecycle and per-core execution on compute nodes. Mutable
/// state is confined to one run.
class HostPool {
 public:
  HostPool(Engine& engine, const Topology& topo, Network& network,
           MetricsLedger& ledger);

  NodeState& state(NodeId node) { return states_.at(node); }
  const NodeState& state(NodeId node) const { return states_.at(node); }

  ContainerInstance& instance(InstanceId id) { return instances_.at(id); }
  const ContainerInstance& instance(InstanceId id) const {
    return instances_.at(id);
  }
  const std::vector<ContainerInstance>& instances() const {
    return instances_;
  }

  bool can_admit(NodeId node, const ContainerSpec& spec) const;

  /// Debits resources immediately and starts the image transfer from the
  /// cloud; `on_running` fires when the instance becomes running.
  /// Throws std::runtime_error when resources are insufficient.
  InstanceId admit_container(const ContainerSpec& spec, int app_index,
                             NodeId node, std::vector<NodeId> subscribers,
                             std::function<void(InstanceId)> on_running);

  struct ExecutionTimes {
    SimTime started;   // core pickup
    SimTime finished;  // service + hypervisor mediation done
  };

  /// Appends the task to the least-loaded core of the instance's host.
  /// Hypervisor mediation (2x link latency) applies only on VM hosts.
  /// `on_done` fires at the completion event.
  ExecutionTimes execute(InstanceId inst, double length_mi, double request_mb,
                         double response_mb,
                         std::function<void(SimTime)> on_done);

  /// Credits resources back; deferred until in-flight tasks drain.
  void remove_container(InstanceId inst,
                        std::function<void(InstanceId)> on_removed = {});

  /// Charges idle/active node energy for the whole horizon. Call at run end.
  void finalize_energy(SimTime horizon);

 private:
  void finish_removal(InstanceId inst);

  Engine& engine_;
  const Topology& topo_;
  Network& network_;
  MetricsLedger& ledger_;
  std::unordered_map<NodeId, NodeState> states_;
  std::vector<ContainerInstance> instances_;
  std::unordered_map<InstanceId, std::function<void(InstanceId)>> on_removed_;
};

}  // namespace ponsim
