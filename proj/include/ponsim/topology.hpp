#pragma once

#include <string>
#include <vector>

#include "ponsim/types.hpp"

namespace ponsim {

enum class NodeKind : std::uint8_t { Cloud, Olt, Vm, Ont, EdgeDevice, Broker };

const char* to_string(NodeKind kind);

/// Compute-capable node kinds: Cloud, Olt (as a physical host), Vm, Ont.
/// Brokers route only; edge devices generate tasks but never host containers.
bool is_compute_capable(NodeKind kind);

struct ComputeSpec {
  int cores = 0;
  double mips_per_core = 0.0;
  double ram_mb = 0.0;
  double storage_mb = 0.0;
  double active_watts = 0.0;  // per busy core
  double idle_watts = 0.0;    // per idle core
};

enum class LinkKind : std::uint8_t { Fiber, Lan, Wan, Hypervisor };

struct Link {
  LinkId id = kInvalidLink;
  NodeId a = kInvalidNode;
  NodeId b = kInvalidNode;
  LinkKind kind = LinkKind::Lan;
  double latency_s = 0.0;
  double bandwidth_mbps = 0.0;
  double energy_per_mb = 0.0;  // joules per megabyte, optional
};

struct Node {
  NodeId id = kInvalidNode;
  NodeKind kind = NodeKind::Cloud;
  ComputeSpec spec;
  NodeId parent = kInvalidNode;  // hierarchy parent (cloud has none)
  LinkId uplink = kInvalidLink;  // link towards the parent
  int depth = 0;
  std::string name;
};

struct LinkParams {
  double latency_s = 0.0;
  double bandwidth_mbps = 1000.0;
  double energy_per_mb = 0.0;
};

/// Everything needed to materialize the node/link tables.
struct TopologySpec {
  int olt_count = 1;
  int vms_per_olt = 4;
  int ont_count = 1;  // one edge device per ONT

  ComputeSpec cloud{64, 100000.0, 262144.0, 1048576.0, 20.0, 10.0};
  ComputeSpec olt{8, 95000.0, 65536.0, 524288.0, 12.0, 6.0};
  ComputeSpec vm{2, 95000.0, 8192.0, 65536.0, 10.0, 5.0};
  ComputeSpec ont{4, 12000.0, 4096.0, 32768.0, 4.0, 2.0};

  LinkParams device_ont{0.0001, 1000.0, 0.002};
  LinkParams ont_olt{0.00015, 1000.0, 0.001};
  LinkParams olt_cloud{0.002, 10000.0, 0.005};
  LinkParams olt_vm{0.003, 200.0, 0.001};
  LinkParams hypervisor{0.0003, 10000.0, 0.0005};
  LinkParams broker{0.0, 100000.0};  // broker is co-located with its OLT
};

/// Immutable hierarchical PON infrastructure: a forest rooted at the cloud
/// with one broker per OLT and a hypervisor link per VM. Safe to share
/// across concurrent runs once built.
class Topology {
 public:
  static Topology build(const TopologySpec& spec);

  const Node& node(NodeId id) const { return nodes_.at(id); }
  const Link& link(LinkId id) const { return links_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  NodeId cloud() const { return cloud_; }
  const std::vector<NodeId>& olts() const { return olts_; }
  const std::vector<NodeId>& onts() const { return onts_; }
  const std::vector<NodeId>& devices() const { return devices_; }
  const std::vector<NodeId>& vms_of(NodeId olt) const;
  NodeId broker_of(NodeId olt) const;
  /// OLT serving any node (for an OLT, itself).
  NodeId olt_of(NodeId id) const;
  /// The device paired with an ONT and vice versa.
  NodeId device_of_ont(NodeId ont) const;
  NodeId ont_of_device(NodeId device) const;

  /// Hypervisor link of a VM, kInvalidLink for other kinds.
  LinkId hypervisor_link_of(NodeId vm) const;

  /// Unique hierarchical route (link ids) via the lowest common ancestor.
  /// Throws std::invalid_argument if a == b or either id is out of range.
  std::vector<LinkId> path(NodeId a, NodeId b) const;

  /// Sum of link latencies along path(a, b); zero when a == b.
  double path_latency(NodeId a, NodeId b) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  NodeId cloud_ = kInvalidNode;
  std::vector<NodeId> olts_;
  std::vector<NodeId> onts_;
  std::vector<NodeId> devices_;
  std::vector<std::vector<NodeId>> vms_by_olt_index_;
  std::vector<NodeId> broker_by_olt_index_;
  std::vector<LinkId> hyp_link_by_node_;
  std::vector<int> olt_index_by_node_;
};

}  // namespace ponsim
