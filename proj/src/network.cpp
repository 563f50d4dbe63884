#include "ponsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ponsim {

namespace {
constexpr double kDrainEps = 1e-12;  // megabytes
}

TransferId Network::start_transfer(NodeId src, NodeId dst, double size_mb,
                                   TransferKind kind,
                                   OnDelivered on_delivered) {
  (void)kind;
  if (size_mb < 0.0) throw std::invalid_argument("negative transfer size");

  Flow flow;
  flow.id = next_id_++;
  flow.size_mb = size_mb;
  flow.remaining_mb = size_mb;
  flow.last_update = engine_.now();
  flow.on_delivered = std::move(on_delivered);
  flow.links = topo_.path(src, dst);
  flow.latency_s = 0.0;
  flow.energy_per_mb_sum = 0.0;
  for (LinkId l : flow.links) {
    flow.latency_s += topo_.link(l).latency_s;
    flow.energy_per_mb_sum += topo_.link(l).energy_per_mb;
  }

  TransferId id = flow.id;
  if (size_mb == 0.0) {
    // Pure-latency delivery; does not join links.
    double latency = flow.latency_s;
    OnDelivered cb = std::move(flow.on_delivered);
    engine_.schedule_in(latency, EventKind::TransferComplete, id,
                        [cb = std::move(cb)] {
                          if (cb) cb();
                        });
    return id;
  }

  std::vector<LinkId> affected = flow.links;
  for (LinkId l : flow.links) flows_on_link_[l].push_back(id);
  flows_.emplace(id, std::move(flow));
  rebalance(affected);
  return id;
}

double Network::rate_sum(LinkId link) const {
  double sum = 0.0;
  for (TransferId id : flows_on_link_[link]) sum += flows_.at(id).rate_mbps;
  return sum;
}

void Network::settle(Flow& flow, SimTime now) {
  if (now > flow.last_update && flow.rate_mbps > 0.0) {
    flow.remaining_mb -= flow.rate_mbps * (now - flow.last_update) / 8.0;
    if (flow.remaining_mb < kDrainEps) flow.remaining_mb = 0.0;
  }
  flow.last_update = now;
}

double Network::fair_rate(const Flow& flow) const {
  double rate = std::numeric_limits<double>::infinity();
  for (LinkId l : flow.links) {
    double share = topo_.link(l).bandwidth_mbps /
                   static_cast<double>(flows_on_link_[l].size());
    rate = std::min(rate, share);
  }
  return rate;
}

void Network::rebalance(const std::vector<LinkId>& links) {
  SimTime now = engine_.now();
  // Flows not sharing any affected link keep their rates; link membership
  // only changed on `links`.
  std::vector<TransferId> touched;
  for (LinkId l : links)
    touched.insert(touched.end(), flows_on_link_[l].begin(),
                   flows_on_link_[l].end());
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  for (TransferId id : touched) {
    Flow& flow = flows_.at(id);
    settle(flow, now);
    double rate = fair_rate(flow);
    if (rate != flow.rate_mbps || flow.version == 0) {
      flow.rate_mbps = rate;
      schedule_drain(flow);
    }
  }
  if (audit) audit(*this);
}

void Network::schedule_drain(Flow& flow) {
  std::uint64_t version = ++flow.version;
  TransferId id = flow.id;
  double drain_s = flow.remaining_mb * 8.0 / flow.rate_mbps;
  engine_.schedule_in(drain_s, EventKind::TransferComplete, id,
                      [this, id, version] {
                        auto it = flows_.find(id);
                        if (it == flows_.end() || it->second.version != version)
                          return;  // superseded
                        complete(id);
                      });
}

void Network::complete(TransferId id) {
  Flow& flow = flows_.at(id);
  settle(flow, engine_.now());
  flow.remaining_mb = 0.0;

  ledger_.add_link_energy(flow.size_mb * flow.energy_per_mb_sum);

  std::vector<LinkId> affected = flow.links;
  for (LinkId l : flow.links) {
    auto& v = flows_on_link_[l];
    v.erase(std::remove(v.begin(), v.end(), id), v.end());
  }
  double latency = flow.latency_s;
  OnDelivered cb = std::move(flow.on_delivered);
  flows_.erase(id);
  rebalance(affected);
  engine_.schedule_in(latency, EventKind::TransferComplete, id,
                      [cb = std::move(cb)] {
                        if (cb) cb();
                      });
}

}  // namespace ponsim
