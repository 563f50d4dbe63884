#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ponsim/topology.hpp"

using namespace ponsim;

namespace {

// Independent route oracle: climb both endpoints to the root, then strip the
// shared suffix of uplinks.
std::vector<LinkId> brute_force_path(const Topology& t, NodeId a, NodeId b) {
  auto chain = [&](NodeId n) {
    std::vector<LinkId> links;
    while (t.node(n).parent != kInvalidNode) {
      links.push_back(t.node(n).uplink);
      n = t.node(n).parent;
    }
    return links;
  };
  std::vector<LinkId> up = chain(a), down = chain(b);
  while (!up.empty() && !down.empty() && up.back() == down.back()) {
    up.pop_back();
    down.pop_back();
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

TEST_CASE("construction counts match the spec") {
  TopologySpec spec;
  spec.olt_count = 3;
  spec.vms_per_olt = 7;
  spec.ont_count = 298;
  Topology t = Topology::build(spec);

  CHECK(t.olts().size() == 3);
  CHECK(t.onts().size() == 298);
  CHECK(t.devices().size() == 298);
  for (NodeId olt : t.olts()) {
    CHECK(t.vms_of(olt).size() == 7);
    CHECK(t.node(t.broker_of(olt)).kind == NodeKind::Broker);
    CHECK(t.olt_of(olt) == olt);
  }
  // Every ONT pairs with exactly one device and vice versa.
  for (NodeId ont : t.onts()) {
    NodeId dev = t.device_of_ont(ont);
    CHECK(t.node(dev).kind == NodeKind::EdgeDevice);
    CHECK(t.ont_of_device(dev) == ont);
  }
  // 1 cloud + 3 OLT + 3 broker + 21 VM + 298 ONT + 298 devices
  CHECK(t.nodes().size() == 1 + 3 + 3 + 21 + 298 + 298);
}

TEST_CASE("compute capability by kind") {
  CHECK(is_compute_capable(NodeKind::Cloud));
  CHECK(is_compute_capable(NodeKind::Olt));
  CHECK(is_compute_capable(NodeKind::Vm));
  CHECK(is_compute_capable(NodeKind::Ont));
  CHECK(!is_compute_capable(NodeKind::EdgeDevice));
  CHECK(!is_compute_capable(NodeKind::Broker));
}

TEST_CASE("paths match a brute-force LCA oracle") {
  TopologySpec spec;
  spec.olt_count = 2;
  spec.vms_per_olt = 3;
  spec.ont_count = 5;
  Topology t = Topology::build(spec);

  for (NodeId a = 0; a < static_cast<NodeId>(t.nodes().size()); ++a) {
    for (NodeId b = 0; b < static_cast<NodeId>(t.nodes().size()); ++b) {
      if (a == b) continue;
      auto got = t.path(a, b);
      auto want = brute_force_path(t, a, b);
      auto sorted = [](std::vector<LinkId> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(sorted(got) == sorted(want));
      double lat = 0.0;
      for (LinkId l : want) lat += t.link(l).latency_s;
      CHECK(t.path_latency(a, b) == doctest::Approx(lat).epsilon(1e-12));
    }
  }
}

TEST_CASE("path latency is symmetric and zero on identity") {
  Topology t = Topology::build(TopologySpec{});
  NodeId dev = t.devices()[0];
  NodeId vm = t.vms_of(t.olts()[0])[0];
  CHECK(t.path_latency(dev, vm) ==
        doctest::Approx(t.path_latency(vm, dev)).epsilon(1e-12));
  CHECK(t.path_latency(dev, dev) == 0.0);
  CHECK_THROWS_AS(t.path(dev, dev), std::invalid_argument);
}

TEST_CASE("device-to-VM route crosses ONT, OLT, and VM links") {
  TopologySpec spec;
  Topology t = Topology::build(spec);
  NodeId dev = t.devices()[0];
  NodeId vm = t.vms_of(t.olts()[0])[0];
  double expect = spec.device_ont.latency_s + spec.ont_olt.latency_s +
                  spec.olt_vm.latency_s;
  CHECK(t.path_latency(dev, vm) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("hypervisor links exist exactly for VMs") {
  Topology t = Topology::build(TopologySpec{});
  for (const Node& n : t.nodes()) {
    if (n.kind == NodeKind::Vm) {
      LinkId l = t.hypervisor_link_of(n.id);
      REQUIRE(l != kInvalidLink);
      CHECK(t.link(l).kind == LinkKind::Hypervisor);
    } else {
      CHECK(t.hypervisor_link_of(n.id) == kInvalidLink);
    }
  }
}

TEST_CASE("brokers are latency-colocated with their OLT") {
  TopologySpec spec;
  spec.olt_count = 2;
  Topology t = Topology::build(spec);
  for (NodeId olt : t.olts())
    CHECK(t.path_latency(olt, t.broker_of(olt)) ==
          doctest::Approx(spec.broker.latency_s).epsilon(1e-12));
}
