#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ponsim/types.hpp"
#include "ponsim/virtualization.hpp"

namespace ponsim {

enum class PatternKind : std::uint8_t { Random, Bursty, Periodic };

const char* to_string(PatternKind kind);

struct Pattern {
  PatternKind kind = PatternKind::Periodic;
  int burst_size = 5;            // bursty only
  double burst_interval_s = 15;  // bursty only
};

struct ApplicationSpec {
  std::string name;
  int user_count = 1;
  double task_rate_per_min = 1.0;
  double max_latency_s = 1.0;  // SLO
  double task_length_mi = 1000.0;
  double request_kb = 1.0;
  double response_kb = 1.0;
  Pattern pattern;
  ContainerSpec container;
};

struct UserProfile {
  NodeId device = kInvalidNode;
  int app_index = -1;
  int profile_index = -1;
  Pattern pattern;
  double task_rate_per_min = 1.0;
  double start_time_s = 0.0;
  /// Active/idle phases alternate from start_time; idle 0 means always on.
  double active_duration_s = 0.0;  // 0 = no alternation
  double idle_duration_s = 0.0;
};

/// Successive arrival wall times for one profile. Arrival phase advances on
/// an "activity clock" that pauses during idle windows, so idle intervals
/// suppress arrivals without distorting the active-time rate.
class ArrivalGenerator {
 public:
  ArrivalGenerator(const UserProfile& profile, std::mt19937_64& rng,
                   double horizon_s);

  /// Next arrival wall time, or nullopt past the horizon.
  std::optional<SimTime> next();

 private:
  double to_wall(double activity) const;

  const UserProfile profile_;
  std::mt19937_64& rng_;
  double horizon_s_;
  double activity_ = 0.0;  // activity-clock position of the last arrival
  int burst_remaining_ = 0;
  double mean_gap_s_;
};

struct DeploymentRequest {
  int app_index = -1;
  /// Bound subscriber for private instances; invalid for shared ones.
  NodeId subscriber = kInvalidNode;
};

/// Deployment requests for a scenario, interleaved round-robin across apps:
/// replica_count shared requests per app, or one private request per
/// subscriber. `devices_per_app[i]` lists the app's user devices.
std::vector<DeploymentRequest> emit_container_requests(
    const std::vector<ApplicationSpec>& apps,
    const std::vector<std::vector<NodeId>>& devices_per_app);

}  // namespace ponsim
