#include "ponsim/workload.hpp"

#include <cmath>

namespace ponsim {

const char* to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Random:
      return "random";
    case PatternKind::Bursty:
      return "bursty";
    case PatternKind::Periodic:
      return "periodic";
  }
  return "unknown";
}

ArrivalGenerator::ArrivalGenerator(const UserProfile& profile,
                                   std::mt19937_64& rng, double horizon_s)
    : profile_(profile), rng_(rng), horizon_s_(horizon_s) {
  mean_gap_s_ = 60.0 / profile.task_rate_per_min;
}

double ArrivalGenerator::to_wall(double activity) const {
  double wall;
  if (profile_.active_duration_s <= 0.0 || profile_.idle_duration_s <= 0.0) {
    wall = profile_.start_time_s + activity;
  } else {
    double active = profile_.active_duration_s;
    double cycle = active + profile_.idle_duration_s;
    double phases = std::floor(activity / active);
    double within = activity - phases * active;
    wall = profile_.start_time_s + phases * cycle + within;
  }
  return wall;
}

std::optional<SimTime> ArrivalGenerator::next() {
  switch (profile_.pattern.kind) {
    case PatternKind::Periodic:
      activity_ += mean_gap_s_;
      break;
    case PatternKind::Random: {
      std::exponential_distribution<double> gap(1.0 / mean_gap_s_);
      activity_ += gap(rng_);
      break;
    }
    case PatternKind::Bursty: {
      if (burst_remaining_ > 0) {
        --burst_remaining_;  // back-to-back arrival, same instant
      } else {
        activity_ += profile_.pattern.burst_interval_s;
        burst_remaining_ = profile_.pattern.burst_size - 1;
      }
      break;
    }
  }
  double wall = to_wall(activity_);
  if (wall > horizon_s_) return std::nullopt;
  return wall;
}

std::vector<DeploymentRequest> emit_container_requests(
    const std::vector<ApplicationSpec>& apps,
    const std::vector<std::vector<NodeId>>& devices_per_app) {
  std::vector<std::vector<DeploymentRequest>> per_app(apps.size());
  for (std::size_t a = 0; a < apps.size(); ++a) {
    const ApplicationSpec& app = apps[a];
    if (app.container.shared) {
      for (int r = 0; r < app.container.replica_count; ++r)
        per_app[a].push_back({static_cast<int>(a), kInvalidNode});
    } else {
      for (NodeId dev : devices_per_app[a])
        per_app[a].push_back({static_cast<int>(a), dev});
    }
  }
  // Interleave round-robin across apps so early replicas of every app land
  // before any app's late ones.
  std::vector<DeploymentRequest> out;
  bool more = true;
  for (std::size_t round = 0; more; ++round) {
    more = false;
    for (std::size_t a = 0; a < per_app.size(); ++a) {
      if (round < per_app[a].size()) {
        out.push_back(per_app[a][round]);
        more = true;
      }
    }
  }
  return out;
}

}  // namespace ponsim
