#include "ponsim/orchestration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ponsim {

const char* to_string(PlacementAlgorithm a) {
  switch (a) {
    case PlacementAlgorithm::RoundRobin:
      return "round_robin";
    case PlacementAlgorithm::CpuGreedy:
      return "cpu_greedy";
    case PlacementAlgorithm::TradeOff:
      return "trade_off";
    case PlacementAlgorithm::MultiObjective:
      return "multi_objective";
  }
  return "unknown";
}

const char* to_string(PlacementVariant v) {
  switch (v) {
    case PlacementVariant::Standard:
      return "standard";
    case PlacementVariant::LatencyBased:
      return "latency";
    case PlacementVariant::RateBased:
      return "rate";
  }
  return "unknown";
}

const char* to_string(OffloadAlgorithm a) {
  switch (a) {
    case OffloadAlgorithm::RoundRobin:
      return "round_robin";
    case OffloadAlgorithm::BestLatency:
      return "best_latency";
    case OffloadAlgorithm::BestDelay:
      return "best_delay";
  }
  return "unknown";
}

const char* to_string(OffloadMode m) {
  return m == OffloadMode::Static ? "static" : "dynamic";
}

const char* to_string(DeploymentModel m) {
  return m == DeploymentModel::EdgeOnly ? "edge_only" : "far_edge_plus_edge";
}

PlacementAlgorithm PolicyConfig::parse_placement_algorithm(
    const std::string& s) {
  if (s == "round_robin") return PlacementAlgorithm::RoundRobin;
  if (s == "cpu_greedy") return PlacementAlgorithm::CpuGreedy;
  if (s == "trade_off") return PlacementAlgorithm::TradeOff;
  if (s == "multi_objective") return PlacementAlgorithm::MultiObjective;
  throw std::invalid_argument("unknown placement algorithm: " + s);
}

PlacementVariant PolicyConfig::parse_placement_variant(const std::string& s) {
  if (s == "standard") return PlacementVariant::Standard;
  if (s == "latency") return PlacementVariant::LatencyBased;
  if (s == "rate") return PlacementVariant::RateBased;
  throw std::invalid_argument("unknown placement variant: " + s);
}

OffloadAlgorithm PolicyConfig::parse_offload_algorithm(const std::string& s) {
  if (s == "round_robin") return OffloadAlgorithm::RoundRobin;
  if (s == "best_latency") return OffloadAlgorithm::BestLatency;
  if (s == "best_delay") return OffloadAlgorithm::BestDelay;
  throw std::invalid_argument("unknown offloading algorithm: " + s);
}

OffloadMode PolicyConfig::parse_offload_mode(const std::string& s) {
  if (s == "static") return OffloadMode::Static;
  if (s == "dynamic") return OffloadMode::Dynamic;
  throw std::invalid_argument("unknown offloading mode: " + s);
}

namespace {
std::pair<std::string, std::string> split_colon(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("expected name:qualifier, got: " + s);
  return {s.substr(0, pos), s.substr(pos + 1)};
}
}  // namespace

void PolicyConfig::set_placement(const std::string& s) {
  auto [name, variant] = split_colon(s);
  placement_algorithm = parse_placement_algorithm(name);
  placement_variant = parse_placement_variant(variant);
}

void PolicyConfig::set_offloading(const std::string& s) {
  auto [name, mode] = split_colon(s);
  offload_algorithm = parse_offload_algorithm(name);
  offload_mode = parse_offload_mode(mode);
}

std::string PolicyConfig::placement_string() const {
  return std::string(to_string(placement_algorithm)) + ":" +
         to_string(placement_variant);
}

std::string PolicyConfig::offloading_string() const {
  return std::string(to_string(offload_algorithm)) + ":" +
         to_string(offload_mode);
}

DeploymentModel parse_deployment_model(const std::string& s) {
  if (s == "edge_only") return DeploymentModel::EdgeOnly;
  if (s == "far_edge_plus_edge") return DeploymentModel::FarEdgePlusEdge;
  throw std::invalid_argument("unknown deployment model: " + s);
}

// ---------------------------------------------------------------------------

double score_cpu_greedy(int container_count, int cores) {
  return static_cast<double>(container_count) / static_cast<double>(cores);
}

double score_trade_off(int container_count, double t_weight,
                       double task_length_mi, double mips_per_core) {
  return (2.0 * container_count + 1.0) * t_weight * task_length_mi /
         mips_per_core;
}

double score_multi_objective(double ram_avail, double ram_tot,
                             double stor_avail, double stor_tot,
                             int cores_avail, int cores_tot, double mips,
                             double mips_max, const MoWeights& w,
                             int container_count, double t_weight) {
  double s = w.w_ram * (ram_avail / ram_tot) +
             w.w_storage * (stor_avail / stor_tot) +
             w.w_cores * (static_cast<double>(cores_avail) / cores_tot) +
             w.w_mips * (mips / mips_max);
  return s - container_count - t_weight;
}

double score_best_delay(double net_latency_s, double pending_mi,
                        double new_task_mi, double mips_per_core, int cores) {
  return net_latency_s + (pending_mi / mips_per_core +
                          new_task_mi / mips_per_core) /
                             static_cast<double>(cores);
}

std::size_t select_cpu_greedy(const std::vector<PlacementCandidate>& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    double fi = score_cpu_greedy(c[i].container_count, c[i].cores);
    double fb = score_cpu_greedy(c[best].container_count, c[best].cores);
    if (fi < fb || (fi == fb && c[i].cores > c[best].cores))
      best = i;  // lowest pressure, ties prefer more cores, then lowest id
  }
  return best;
}

std::size_t select_trade_off(const std::vector<PlacementCandidate>& c,
                             double task_length_mi) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    double fi = score_trade_off(c[i].container_count, c[i].t_trade_off,
                                task_length_mi, c[i].mips);
    double fb = score_trade_off(c[best].container_count, c[best].t_trade_off,
                                task_length_mi, c[best].mips);
    if (fi < fb) best = i;
  }
  return best;
}

std::size_t select_multi_objective(const std::vector<PlacementCandidate>& c,
                                   const MoWeights& w) {
  double mips_max = 0.0;
  for (const auto& cand : c) mips_max = std::max(mips_max, cand.mips);
  std::size_t best = 0;
  auto score = [&](const PlacementCandidate& cand) {
    return score_multi_objective(cand.ram_avail, cand.ram_tot, cand.stor_avail,
                                 cand.stor_tot, cand.cores - cand.busy_cores,
                                 cand.cores, cand.mips, mips_max, w,
                                 cand.container_count,
                                 cand.t_multi_objective);
  };
  for (std::size_t i = 1; i < c.size(); ++i)
    if (score(c[i]) > score(c[best])) best = i;
  return best;
}

std::size_t select_best_latency(const std::vector<OffloadCandidate>& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].net_latency_s < c[best].net_latency_s ||
        (c[i].net_latency_s == c[best].net_latency_s &&
         c[i].assigned_tasks < c[best].assigned_tasks))
      best = i;
  }
  return best;
}

std::size_t select_best_delay(const std::vector<OffloadCandidate>& c,
                              double new_task_mi) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    double di = score_best_delay(c[i].net_latency_s, c[i].pending_mi,
                                 new_task_mi, c[i].mips, c[i].cores);
    double db = score_best_delay(c[best].net_latency_s, c[best].pending_mi,
                                 new_task_mi, c[best].mips, c[best].cores);
    if (di < db ||
        (di == db && c[i].assigned_tasks < c[best].assigned_tasks))
      best = i;
  }
  return best;
}

// ---------------------------------------------------------------------------

const std::vector<InstanceId> Orchestrator::kEmptyDirectory;

Orchestrator::Orchestrator(
    const Topology& topo, HostPool& pool, PolicyConfig policy,
    DeploymentModel deployment, const std::vector<ApplicationSpec>* apps,
    const std::vector<std::vector<NodeId>>* devices_per_app)
    : topo_(topo),
      pool_(pool),
      policy_(std::move(policy)),
      deployment_(deployment),
      apps_(apps),
      devices_per_app_(devices_per_app) {
  for (const Node& n : topo.nodes()) {
    if (n.kind == NodeKind::Vm) universe_.push_back(n.id);
    if (n.kind == NodeKind::Ont && deployment == DeploymentModel::FarEdgePlusEdge)
      universe_.push_back(n.id);
  }
  std::sort(universe_.begin(), universe_.end());
  directory_.resize(apps ? apps->size() : 0);
}

PlacementCandidate Orchestrator::make_candidate(NodeId node,
                                                SimTime now) const {
  const Node& n = topo_.node(node);
  const NodeState& s = pool_.state(node);
  PlacementCandidate c;
  c.node = node;
  c.cores = n.spec.cores;
  c.mips = n.spec.mips_per_core;
  c.ram_avail = s.available_ram_mb;
  c.ram_tot = n.spec.ram_mb;
  c.stor_avail = s.available_storage_mb;
  c.stor_tot = n.spec.storage_mb;
  c.busy_cores = s.busy_cores(now);
  c.container_count = s.container_count;
  auto weight = [&](const std::map<NodeKind, double>& m) {
    auto it = m.find(n.kind);
    return it == m.end() ? 0.0 : it->second;
  };
  c.t_trade_off = weight(policy_.trade_off_weights);
  c.t_multi_objective = weight(policy_.multi_objective_weights);
  return c;
}

std::vector<NodeId> Orchestrator::hosts_in_scope() const {
  std::vector<NodeId> hosts = topo_.olts();
  if (deployment_ == DeploymentModel::FarEdgePlusEdge)
    hosts.insert(hosts.end(), topo_.onts().begin(), topo_.onts().end());
  std::sort(hosts.begin(), hosts.end());
  return hosts;
}

std::vector<NodeId> Orchestrator::scope_nodes(NodeId host) const {
  if (topo_.node(host).kind == NodeKind::Olt) return topo_.vms_of(host);
  return {host};  // ONT executes on the physical node itself
}

std::optional<NodeId> Orchestrator::apply_algorithm(
    const std::vector<NodeId>& scope, int app_index, SimTime now) {
  const ContainerSpec& spec = (*apps_)[app_index].container;
  std::vector<NodeId> feasible;
  for (NodeId n : scope)
    if (pool_.can_admit(n, spec)) feasible.push_back(n);
  if (feasible.empty()) return std::nullopt;

  if (policy_.placement_algorithm == PlacementAlgorithm::RoundRobin) {
    NodeId chosen = feasible[rr_placement_cursor_ % feasible.size()];
    ++rr_placement_cursor_;
    return chosen;
  }

  std::vector<PlacementCandidate> candidates;
  candidates.reserve(feasible.size());
  for (NodeId n : feasible) candidates.push_back(make_candidate(n, now));

  std::size_t idx = 0;
  switch (policy_.placement_algorithm) {
    case PlacementAlgorithm::CpuGreedy:
      idx = select_cpu_greedy(candidates);
      break;
    case PlacementAlgorithm::TradeOff:
      idx = select_trade_off(candidates, (*apps_)[app_index].task_length_mi);
      break;
    case PlacementAlgorithm::MultiObjective:
      idx = select_multi_objective(candidates, policy_.mo_weights);
      break;
    case PlacementAlgorithm::RoundRobin:
      break;  // handled above
  }
  return candidates[idx].node;
}

std::optional<NodeId> Orchestrator::place(int app_index, SimTime now) {
  if (policy_.placement_variant == PlacementVariant::Standard)
    return apply_algorithm(universe_, app_index, now);

  NodeId host = policy_.placement_variant == PlacementVariant::LatencyBased
                    ? select_host_latency(app_index)
                    : select_host_rate(app_index);
  if (host == kInvalidNode) return std::nullopt;
  return apply_algorithm(scope_nodes(host), app_index, now);
}

double Orchestrator::mean_latency_for_host(NodeId host, int app_index) const {
  const std::vector<NodeId>& subs = (*devices_per_app_)[app_index];
  if (subs.empty()) return 0.0;
  // Mean latency between this app's containers on the host and their
  // subscriber devices; cold hosts fall back to host-to-subscriber latency.
  double sum = 0.0;
  std::size_t pairs = 0;
  for (const ContainerInstance& inst : pool_.instances()) {
    if (inst.state == InstanceState::Removed || inst.app_index != app_index)
      continue;
    NodeId inst_scope = topo_.node(inst.host).kind == NodeKind::Vm
                            ? topo_.olt_of(inst.host)
                            : inst.host;
    if (inst_scope != host) continue;
    for (NodeId dev : inst.subscribers.empty() ? subs : inst.subscribers) {
      sum += topo_.path_latency(dev, inst.host);
      ++pairs;
    }
  }
  if (pairs > 0) return sum / static_cast<double>(pairs);
  for (NodeId dev : subs) sum += topo_.path_latency(dev, host);
  return sum / static_cast<double>(subs.size());
}

int Orchestrator::same_app_copies(NodeId host, int app_index) const {
  int copies = 0;
  for (const ContainerInstance& inst : pool_.instances()) {
    if (inst.state == InstanceState::Removed || inst.app_index != app_index)
      continue;
    NodeId inst_scope = topo_.node(inst.host).kind == NodeKind::Vm
                            ? topo_.olt_of(inst.host)
                            : inst.host;
    if (inst_scope == host) ++copies;
  }
  return copies;
}

int Orchestrator::associated_devices(NodeId host) const {
  if (topo_.node(host).kind == NodeKind::Ont) return 1;
  int n = 0;
  for (NodeId dev : topo_.devices())
    if (topo_.olt_of(dev) == host) ++n;
  return n;
}

NodeId Orchestrator::select_host_latency(int app_index) const {
  const ContainerSpec& spec = (*apps_)[app_index].container;
  NodeId best = kInvalidNode;
  double best_lat = 0.0;
  int best_copies = 0;
  for (NodeId host : hosts_in_scope()) {
    bool feasible = false;
    for (NodeId n : scope_nodes(host))
      if (pool_.can_admit(n, spec)) feasible = true;
    if (!feasible) continue;
    double lat = mean_latency_for_host(host, app_index);
    int copies = same_app_copies(host, app_index);
    if (best == kInvalidNode || lat < best_lat ||
        (lat == best_lat && copies < best_copies)) {
      best = host;
      best_lat = lat;
      best_copies = copies;
    }
  }
  return best;
}

NodeId Orchestrator::select_host_rate(int app_index) const {
  const ContainerSpec& spec = (*apps_)[app_index].container;
  NodeId best = kInvalidNode;
  double best_ratio = 0.0;
  int best_copies = 0;
  for (NodeId host : hosts_in_scope()) {
    bool feasible = false;
    for (NodeId n : scope_nodes(host))
      if (pool_.can_admit(n, spec)) feasible = true;
    if (!feasible) continue;
    int devices = associated_devices(host);
    int copies = same_app_copies(host, app_index);
    // Hosts with no associated devices rank last.
    double ratio = devices > 0
                       ? static_cast<double>(copies) / devices
                       : std::numeric_limits<double>::infinity();
    if (best == kInvalidNode || ratio < best_ratio ||
        (ratio == best_ratio && copies < best_copies)) {
      best = host;
      best_ratio = ratio;
      best_copies = copies;
    }
  }
  return best;
}

void Orchestrator::register_running(InstanceId inst_id) {
  const ContainerInstance& inst = pool_.instance(inst_id);
  auto& dir = directory_.at(inst.app_index);
  dir.insert(std::upper_bound(dir.begin(), dir.end(), inst_id), inst_id);
}

void Orchestrator::unregister(InstanceId inst_id) {
  const ContainerInstance& inst = pool_.instance(inst_id);
  auto& dir = directory_.at(inst.app_index);
  dir.erase(std::remove(dir.begin(), dir.end(), inst_id), dir.end());
  for (auto& [broker, bs] : brokers_) {
    for (auto it = bs.static_bindings.begin();
         it != bs.static_bindings.end();) {
      if (it->second == inst_id)
        it = bs.static_bindings.erase(it);
      else
        ++it;
    }
  }
}

const std::vector<InstanceId>& Orchestrator::directory(int app_index) const {
  if (app_index < 0 || static_cast<std::size_t>(app_index) >= directory_.size())
    return kEmptyDirectory;
  return directory_[app_index];
}

BrokerState& Orchestrator::broker_state(NodeId device) {
  NodeId broker = topo_.broker_of(topo_.olt_of(device));
  auto it = brokers_.find(broker);
  if (it == brokers_.end()) {
    BrokerState bs;
    bs.broker = broker;
    it = brokers_.emplace(broker, std::move(bs)).first;
  }
  return it->second;
}

std::optional<InstanceId> Orchestrator::run_offload_algorithm(
    NodeId device, int app_index, BrokerState& bs) {
  const auto& dir = directory_[app_index];
  if (dir.empty()) return std::nullopt;

  if (policy_.offload_algorithm == OffloadAlgorithm::RoundRobin) {
    std::size_t& cursor = bs.rr_cursors[app_index];
    InstanceId chosen = dir[cursor % dir.size()];
    ++cursor;
    return chosen;
  }

  std::vector<OffloadCandidate> candidates;
  candidates.reserve(dir.size());
  for (InstanceId id : dir) {
    const ContainerInstance& inst = pool_.instance(id);
    const Node& host = topo_.node(inst.host);
    OffloadCandidate c;
    c.instance = id;
    c.host = inst.host;
    c.net_latency_s = topo_.path_latency(device, inst.host);
    c.assigned_tasks = inst.assigned_task_count;
    c.pending_mi = pool_.state(inst.host).pending_mi;
    c.mips = host.spec.mips_per_core;
    c.cores = host.spec.cores;
    candidates.push_back(c);
  }
  std::size_t idx =
      policy_.offload_algorithm == OffloadAlgorithm::BestLatency
          ? select_best_latency(candidates)
          : select_best_delay(candidates, (*apps_)[app_index].task_length_mi);
  return candidates[idx].instance;
}

std::optional<InstanceId> Orchestrator::offload(NodeId device, int app_index) {
  // Private apps always resolve to the device's bound instance.
  if (!(*apps_)[app_index].container.shared) {
    auto it = private_binding_.find(device);
    if (it == private_binding_.end()) return std::nullopt;
    if (pool_.instance(it->second).state != InstanceState::Running)
      return std::nullopt;
    return it->second;
  }

  BrokerState& bs = broker_state(device);
  if (policy_.offload_mode == OffloadMode::Static) {
    auto it = bs.static_bindings.find(device);
    if (it != bs.static_bindings.end() &&
        pool_.instance(it->second).state == InstanceState::Running)
      return it->second;
    auto chosen = run_offload_algorithm(device, app_index, bs);
    if (chosen) bs.static_bindings[device] = *chosen;
    return chosen;
  }
  return run_offload_algorithm(device, app_index, bs);
}

}  // namespace ponsim
