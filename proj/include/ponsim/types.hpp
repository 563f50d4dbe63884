#pragma once

#include <cstdint>
#include <limits>

namespace ponsim {

/// Simulation time in seconds. Continuous; resolution limited only by
/// double precision.
using SimTime = double;

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;
using InstanceId = std::uint32_t;
using TaskId = std::uint64_t;
using TransferId = std::uint64_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();
inline constexpr LinkId kInvalidLink = std::numeric_limits<LinkId>::max();
inline constexpr InstanceId kInvalidInstance =
    std::numeric_limits<InstanceId>::max();

/// Megabytes <-> kilobytes, decimal convention (1 MB = 1000 KB = 8 Mb).
inline constexpr double kb_to_mb(double kb) { return kb / 1000.0; }

/// Time to push `size_mb` through `bandwidth_mbps`, excluding latency.
inline constexpr double transfer_seconds(double size_mb,
                                         double bandwidth_mbps) {
  return size_mb * 8.0 / bandwidth_mbps;
}

}  // namespace ponsim
