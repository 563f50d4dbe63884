#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "ponsim/engine.hpp"
#include "ponsim/metrics.hpp"
#include "ponsim/topology.hpp"
#include "ponsim/types.hpp"

namespace ponsim {

enum class TransferKind : std::uint8_t {
  TaskRequest,
  TaskResponse,
  ContainerImage,
  Control,
};

/// Flow-level data transfers over topology paths. Each active flow drains at
/// the bottleneck fair share of its path: rate = min over links of
/// bandwidth / active-flow-count on that link. Path latency is applied once
/// per transfer, after the drain completes.
class Network {
 public:
  Network(Engine& engine, const Topology& topo, MetricsLedger& ledger)
      : engine_(engine), topo_(topo), ledger_(ledger) {
    flows_on_link_.resize(topo.links().size());
  }

  using OnDelivered = std::function<void()>;

  /// Starts a transfer and returns its id; `on_delivered` fires at
  /// drain-completion + path latency. Zero-size transfers never touch links.
  TransferId start_transfer(NodeId src, NodeId dst, double size_mb,
                            TransferKind kind, OnDelivered on_delivered);

  /// Active flow count on a link (test/audit surface).
  int active_count(LinkId link) const {
    return static_cast<int>(flows_on_link_[link].size());
  }
  /// Sum of allocated rates on a link (test/audit surface).
  double rate_sum(LinkId link) const;
  std::size_t active_flows() const { return flows_.size(); }

  /// Invoked after every fair-share rebalance, for invariant audits.
  std::function<void(const Network&)> audit;

 private:
  struct Flow {
    TransferId id;
    double size_mb;
    double remaining_mb;
    double rate_mbps = 0.0;
    double latency_s;
    double energy_per_mb_sum;
    SimTime last_update;
    std::uint64_t version = 0;  // invalidates superseded drain events
    std::vector<LinkId> links;
    OnDelivered on_delivered;
  };

  void settle(Flow& flow, SimTime now);
  double fair_rate(const Flow& flow) const;
  /// Re-shares every flow touching any of `links` and reschedules drains.
  void rebalance(const std::vector<LinkId>& links);
  void schedule_drain(Flow& flow);
  void complete(TransferId id);

  Engine& engine_;
  const Topology& topo_;
  MetricsLedger& ledger_;
  TransferId next_id_ = 0;
  std::unordered_map<TransferId, Flow> flows_;
  std::vector<std::vector<TransferId>> flows_on_link_;
};

}  // namespace ponsim
