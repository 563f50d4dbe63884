#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ponsim/types.hpp"

namespace ponsim {

enum class TaskOutcome : std::uint8_t { InFlight, Success, SloMiss, Rejected };

const char* to_string(TaskOutcome outcome);

/// Lifecycle trace of one task; unset stages stay NaN.
struct TaskRecord {
  TaskId task_id = 0;
  int app_index = -1;
  NodeId device = kInvalidNode;
  double created_at = NAN;
  double broker_resolved = NAN;
  double request_arrived = NAN;
  double execution_started = NAN;
  double execution_finished = NAN;
  double response_delivered = NAN;
  double deadline = NAN;
  TaskOutcome outcome = TaskOutcome::InFlight;

  double end_to_end() const { return response_delivered - created_at; }
  bool delivered() const { return !std::isnan(response_delivered); }
};

struct AppAggregate {
  std::string app_name;
  double slo_s = 0.0;
  std::uint64_t submitted = 0;
  std::uint64_t success = 0;
  std::uint64_t slo_miss = 0;
  std::uint64_t rejected = 0;
  std::uint64_t in_flight = 0;
  double latency_sum_s = 0.0;  // over delivered tasks
  std::uint64_t delivered = 0;

  std::optional<double> mean_latency() const {
    if (delivered == 0) return std::nullopt;
    return latency_sum_s / static_cast<double>(delivered);
  }
};

/// Per-task outcome records plus run-level aggregates. Append-only during a
/// run; aggregation happens after the horizon.
class MetricsLedger {
 public:
  void set_apps(std::vector<std::string> names, std::vector<double> slos);

  TaskRecord& open_task(TaskId id, int app_index, NodeId device,
                        double created_at, double deadline);
  TaskRecord& record(TaskId id) { return records_[index_.at(id)]; }
  const std::vector<TaskRecord>& records() const { return records_; }

  void add_link_energy(double joules) { link_energy_j_ += joules; }
  void add_node_energy(double joules) { node_energy_j_ += joules; }
  double link_energy_j() const { return link_energy_j_; }
  double node_energy_j() const { return node_energy_j_; }
  double energy_total() const { return link_energy_j_ + node_energy_j_; }

  std::uint64_t placement_failures = 0;

  /// Marks still-in-flight tasks, fills aggregates. Call once at run end.
  void finalize();

  const std::vector<AppAggregate>& per_app() const { return per_app_; }

  std::uint64_t submitted() const { return records_.size(); }
  std::uint64_t completed() const;  // delivered (success or slo_miss)
  std::uint64_t failed() const;     // rejected
  std::uint64_t in_flight() const;

  /// Fraction of submitted tasks that succeeded; in-flight tasks at the
  /// horizon count against it. Absent when nothing was submitted.
  std::optional<double> tsr() const;
  std::optional<double> tsr_app(int app_index) const;

  /// Mean end-to-end latency over delivered tasks.
  std::optional<double> mean_latency() const;

  /// Mean over apps of (mean app latency / app SLO); apps without delivered
  /// tasks are excluded.
  std::optional<double> normalized_latency() const;

 private:
  std::vector<TaskRecord> records_;
  std::unordered_map<TaskId, std::size_t> index_;
  std::vector<AppAggregate> per_app_;
  double link_energy_j_ = 0.0;
  double node_energy_j_ = 0.0;
  bool finalized_ = false;
};

}  // namespace ponsim
