#include "ponsim/virtualization.hpp"

#include <algorithm>
#include <stdexcept>

namespace ponsim {

HostPool::HostPool(Engine& engine, const Topology& topo, Network& network,
                   MetricsLedger& ledger)
    : engine_(engine), topo_(topo), network_(network), ledger_(ledger) {
  for (const Node& n : topo.nodes()) {
    if (!is_compute_capable(n.kind)) continue;
    NodeState s;
    s.node = n.id;
    s.available_ram_mb = n.spec.ram_mb;
    s.available_storage_mb = n.spec.storage_mb;
    s.core_busy_until.assign(n.spec.cores, 0.0);
    states_.emplace(n.id, std::move(s));
  }
}

bool HostPool::can_admit(NodeId node, const ContainerSpec& spec) const {
  auto it = states_.find(node);
  if (it == states_.end()) return false;
  NodeKind kind = topo_.node(node).kind;
  if (kind != NodeKind::Vm && kind != NodeKind::Ont && kind != NodeKind::Cloud)
    return false;  // containers live on VMs, ONTs, or cloud nodes
  return it->second.available_ram_mb >= spec.ram_mb &&
         it->second.available_storage_mb >= spec.storage_mb;
}

InstanceId HostPool::admit_container(
    const ContainerSpec& spec, int app_index, NodeId node,
    std::vector<NodeId> subscribers,
    std::function<void(InstanceId)> on_running) {
  if (!can_admit(node, spec))
    throw std::runtime_error("admit_container: insufficient resources on " +
                             topo_.node(node).name);
  NodeState& ns = states_.at(node);
  ns.available_ram_mb -= spec.ram_mb;
  ns.available_storage_mb -= spec.storage_mb;
  ns.container_count += 1;

  ContainerInstance inst;
  inst.id = static_cast<InstanceId>(instances_.size());
  inst.app_index = app_index;
  inst.spec = spec;
  inst.host = node;
  inst.state = InstanceState::Transferring;
  inst.subscribers = std::move(subscribers);
  instances_.push_back(std::move(inst));
  InstanceId id = instances_.back().id;

  network_.start_transfer(
      topo_.cloud(), node, spec.image_size_mb, TransferKind::ContainerImage,
      [this, id, on_running = std::move(on_running)] {
        instances_[id].state = InstanceState::Running;
        engine_.schedule_in(0.0, EventKind::ContainerDeployed, id,
                            [id, on_running] {
                              if (on_running) on_running(id);
                            });
      });
  return id;
}

HostPool::ExecutionTimes HostPool::execute(
    InstanceId inst_id, double length_mi, double request_mb,
    double response_mb, std::function<void(SimTime)> on_done) {
  ContainerInstance& inst = instances_.at(inst_id);
  if (inst.state != InstanceState::Running)
    throw std::runtime_error("execute: instance not running");
  NodeState& ns = states_.at(inst.host);
  const Node& host = topo_.node(inst.host);

  // Least-loaded core, ties by core index.
  std::size_t core = 0;
  for (std::size_t c = 1; c < ns.core_busy_until.size(); ++c)
    if (ns.core_busy_until[c] < ns.core_busy_until[core]) core = c;

  SimTime now = engine_.now();
  SimTime start = std::max(now, ns.core_busy_until[core]);
  double service = length_mi / host.spec.mips_per_core;
  double overhead = 0.0;
  if (host.kind == NodeKind::Vm) {
    const Link& hyp = topo_.link(topo_.hypervisor_link_of(inst.host));
    overhead = 2.0 * hyp.latency_s;  // request + response mediation
    ledger_.add_link_energy((request_mb + response_mb) * hyp.energy_per_mb);
  }
  SimTime finish = start + service + overhead;

  ns.core_busy_until[core] = start + service;
  ns.pending_mi += length_mi;
  ns.pending_tasks += 1;
  ns.busy_core_seconds += service;

  NodeId host_id = inst.host;
  engine_.schedule(finish, EventKind::ExecutionComplete, inst_id,
                   [this, inst_id, host_id, length_mi, finish,
                    on_done = std::move(on_done)] {
                     NodeState& s = states_.at(host_id);
                     s.pending_mi -= length_mi;
                     if (s.pending_mi < 1e-9) s.pending_mi = 0.0;
                     s.pending_tasks -= 1;
                     ContainerInstance& ci = instances_.at(inst_id);
                     // Assignment is counted at dispatch (broker decision);
                     // direct execute() calls in tests never incremented it.
                     if (ci.assigned_task_count > 0)
                       ci.assigned_task_count -= 1;
                     if (ci.remove_when_drained && ci.assigned_task_count == 0)
                       finish_removal(inst_id);
                     if (on_done) on_done(finish);
                   });
  return ExecutionTimes{start, finish};
}

void HostPool::remove_container(InstanceId inst_id,
                                std::function<void(InstanceId)> on_removed) {
  ContainerInstance& inst = instances_.at(inst_id);
  if (inst.state == InstanceState::Removed) return;
  if (on_removed) on_removed_[inst_id] = std::move(on_removed);
  if (inst.assigned_task_count > 0) {
    inst.remove_when_drained = true;  // deferred until drained
    return;
  }
  finish_removal(inst_id);
}

void HostPool::finish_removal(InstanceId inst_id) {
  ContainerInstance& inst = instances_.at(inst_id);
  NodeState& ns = states_.at(inst.host);
  ns.available_ram_mb += inst.spec.ram_mb;
  ns.available_storage_mb += inst.spec.storage_mb;
  ns.container_count -= 1;
  inst.state = InstanceState::Removed;
  inst.remove_when_drained = false;
  auto it = on_removed_.find(inst_id);
  if (it != on_removed_.end()) {
    auto cb = std::move(it->second);
    on_removed_.erase(it);
    if (cb) cb(inst_id);
  }
}

void HostPool::finalize_energy(SimTime horizon) {
  for (auto& [node, s] : states_) {
    const ComputeSpec& spec = topo_.node(node).spec;
    double busy = std::min(s.busy_core_seconds,
                           horizon * static_cast<double>(spec.cores));
    double idle = horizon * static_cast<double>(spec.cores) - busy;
    ledger_.add_node_energy(busy * spec.active_watts +
                            idle * spec.idle_watts);
  }
}

}  // namespace ponsim
