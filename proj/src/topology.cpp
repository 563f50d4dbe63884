#include "ponsim/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ponsim {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Cloud:
      return "cloud";
    case NodeKind::Olt:
      return "olt";
    case NodeKind::Vm:
      return "vm";
    case NodeKind::Ont:
      return "ont";
    case NodeKind::EdgeDevice:
      return "device";
    case NodeKind::Broker:
      return "broker";
  }
  return "unknown";
}

bool is_compute_capable(NodeKind kind) {
  return kind == NodeKind::Cloud || kind == NodeKind::Olt ||
         kind == NodeKind::Vm || kind == NodeKind::Ont;
}

Topology Topology::build(const TopologySpec& spec) {
  if (spec.olt_count < 1) throw std::invalid_argument("olt_count must be >= 1");
  if (spec.vms_per_olt < 0 || spec.ont_count < 0)
    throw std::invalid_argument("negative node count");

  Topology t;
  auto add_node = [&](NodeKind kind, const ComputeSpec& cs, NodeId parent,
                      const LinkParams* up, LinkKind link_kind,
                      std::string name) -> NodeId {
    Node n;
    n.id = static_cast<NodeId>(t.nodes_.size());
    n.kind = kind;
    n.spec = kind == NodeKind::Broker ? ComputeSpec{} : cs;
    n.parent = parent;
    n.name = std::move(name);
    if (parent != kInvalidNode) {
      n.depth = t.nodes_[parent].depth + 1;
      Link l;
      l.id = static_cast<LinkId>(t.links_.size());
      l.a = parent;
      l.b = n.id;
      l.kind = link_kind;
      l.latency_s = up->latency_s;
      l.bandwidth_mbps = up->bandwidth_mbps;
      l.energy_per_mb = up->energy_per_mb;
      n.uplink = l.id;
      t.links_.push_back(l);
    }
    t.nodes_.push_back(n);
    return n.id;
  };

  t.cloud_ = add_node(NodeKind::Cloud, spec.cloud, kInvalidNode, nullptr,
                      LinkKind::Lan, "cloud");

  t.vms_by_olt_index_.resize(spec.olt_count);
  t.broker_by_olt_index_.resize(spec.olt_count, kInvalidNode);

  for (int i = 0; i < spec.olt_count; ++i) {
    NodeId olt = add_node(NodeKind::Olt, spec.olt, t.cloud_, &spec.olt_cloud,
                          LinkKind::Wan, "olt" + std::to_string(i));
    t.olts_.push_back(olt);
    t.broker_by_olt_index_[i] =
        add_node(NodeKind::Broker, {}, olt, &spec.broker, LinkKind::Lan,
                 "broker" + std::to_string(i));
    for (int v = 0; v < spec.vms_per_olt; ++v) {
      NodeId vm = add_node(NodeKind::Vm, spec.vm, olt, &spec.olt_vm,
                           LinkKind::Lan,
                           "olt" + std::to_string(i) + ".vm" +
                               std::to_string(v));
      t.vms_by_olt_index_[i].push_back(vm);
      // One hypervisor link per VM, connecting it to its container boundary.
      Link hl;
      hl.id = static_cast<LinkId>(t.links_.size());
      hl.a = vm;
      hl.b = vm;
      hl.kind = LinkKind::Hypervisor;
      hl.latency_s = spec.hypervisor.latency_s;
      hl.bandwidth_mbps = spec.hypervisor.bandwidth_mbps;
      hl.energy_per_mb = spec.hypervisor.energy_per_mb;
      t.links_.push_back(hl);
      t.hyp_link_by_node_.resize(t.nodes_.size(), kInvalidLink);
      t.hyp_link_by_node_[vm] = hl.id;
    }
  }

  // ONTs spread evenly over OLTs, one edge device per ONT.
  for (int i = 0; i < spec.ont_count; ++i) {
    NodeId olt = t.olts_[i % spec.olt_count];
    NodeId ont = add_node(NodeKind::Ont, spec.ont, olt, &spec.ont_olt,
                          LinkKind::Fiber, "ont" + std::to_string(i));
    t.onts_.push_back(ont);
  }
  for (int i = 0; i < spec.ont_count; ++i) {
    NodeId dev = add_node(NodeKind::EdgeDevice, {}, t.onts_[i],
                          &spec.device_ont, LinkKind::Lan,
                          "device" + std::to_string(i));
    t.devices_.push_back(dev);
  }

  t.hyp_link_by_node_.resize(t.nodes_.size(), kInvalidLink);

  // Cache the serving OLT per node.
  t.olt_index_by_node_.assign(t.nodes_.size(), -1);
  for (int i = 0; i < spec.olt_count; ++i)
    t.olt_index_by_node_[t.olts_[i]] = i;
  for (const Node& n : t.nodes_) {
    NodeId cur = n.id;
    while (cur != kInvalidNode && t.olt_index_by_node_[cur] < 0)
      cur = t.nodes_[cur].parent;
    if (cur != kInvalidNode)
      t.olt_index_by_node_[n.id] = t.olt_index_by_node_[cur];
  }
  return t;
}

const std::vector<NodeId>& Topology::vms_of(NodeId olt) const {
  int idx = olt_index_by_node_.at(olt);
  if (idx < 0 || node(olt).kind != NodeKind::Olt)
    throw std::invalid_argument("vms_of: not an OLT");
  return vms_by_olt_index_[idx];
}

NodeId Topology::broker_of(NodeId olt) const {
  int idx = olt_index_by_node_.at(olt);
  if (idx < 0) throw std::invalid_argument("broker_of: node has no OLT");
  return broker_by_olt_index_[idx];
}

NodeId Topology::olt_of(NodeId id) const {
  int idx = olt_index_by_node_.at(id);
  if (idx < 0) throw std::invalid_argument("olt_of: node has no serving OLT");
  return olts_[idx];
}

NodeId Topology::device_of_ont(NodeId ont) const {
  for (const Node& n : nodes_)
    if (n.kind == NodeKind::EdgeDevice && n.parent == ont) return n.id;
  throw std::invalid_argument("device_of_ont: no device under ONT");
}

NodeId Topology::ont_of_device(NodeId device) const {
  const Node& n = node(device);
  if (n.kind != NodeKind::EdgeDevice)
    throw std::invalid_argument("ont_of_device: not a device");
  return n.parent;
}

LinkId Topology::hypervisor_link_of(NodeId vm) const {
  return hyp_link_by_node_.at(vm);
}

std::vector<LinkId> Topology::path(NodeId a, NodeId b) const {
  if (a >= nodes_.size() || b >= nodes_.size())
    throw std::invalid_argument("path: node id out of range");
  if (a == b) throw std::invalid_argument("path: endpoints must differ");

  // Climb the deeper endpoint until both sit at the same depth, then climb
  // both until they meet.
  std::vector<LinkId> up_a;
  std::vector<LinkId> up_b;
  NodeId x = a;
  NodeId y = b;
  while (nodes_[x].depth > nodes_[y].depth) {
    up_a.push_back(nodes_[x].uplink);
    x = nodes_[x].parent;
  }
  while (nodes_[y].depth > nodes_[x].depth) {
    up_b.push_back(nodes_[y].uplink);
    y = nodes_[y].parent;
  }
  while (x != y) {
    up_a.push_back(nodes_[x].uplink);
    up_b.push_back(nodes_[y].uplink);
    x = nodes_[x].parent;
    y = nodes_[y].parent;
  }
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

double Topology::path_latency(NodeId a, NodeId b) const {
  if (a == b) return 0.0;
  double total = 0.0;
  for (LinkId l : path(a, b)) total += links_[l].latency_s;
  return total;
}

}  // namespace ponsim
