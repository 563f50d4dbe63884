#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "ponsim/types.hpp"

namespace ponsim {

enum class EventKind : std::uint8_t {
  TaskArrival,
  TransferComplete,
  ExecutionComplete,
  ContainerDeployed,
  ProfileStateChange,
  SimulationEnd,
};

const char* to_string(EventKind kind);

/// One entry of the optional event trace, enough to compare two runs.
struct TraceEntry {
  SimTime fire_time;
  EventKind kind;
  std::uint64_t payload;
};

struct RunSummary {
  SimTime end_time = 0.0;
  std::uint64_t events_processed = 0;
};

/// Deterministic single-threaded discrete-event core. Events are totally
/// ordered by (fire_time, insertion sequence); ties never depend on payload.
class Engine {
 public:
  SimTime now() const { return now_; }

  /// Schedules `action` at absolute time `fire_time`.
  /// Throws std::logic_error if `fire_time` precedes the current clock.
  std::uint64_t schedule(SimTime fire_time, EventKind kind,
                         std::uint64_t payload, std::function<void()> action);

  std::uint64_t schedule_in(SimTime delay, EventKind kind,
                            std::uint64_t payload,
                            std::function<void()> action) {
    return schedule(now_ + delay, kind, payload, std::move(action));
  }

  /// Processes every event with fire_time <= until; leaves the clock at
  /// `until`.
  RunSummary run(SimTime until);

  bool empty() const { return queue_.empty(); }
  std::size_t pending() const { return queue_.size(); }

  /// When set, every dequeued event is appended here.
  void set_trace(std::vector<TraceEntry>* trace) { trace_ = trace; }

 private:
  struct Scheduled {
    SimTime fire_time;
    std::uint64_t sequence;
    EventKind kind;
    std::uint64_t payload;
    std::function<void()> action;
  };
  struct Later {
    bool operator()(const Scheduled& a, const Scheduled& b) const {
      if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
      return a.sequence > b.sequence;
    }
  };

  SimTime now_ = 0.0;
  std::uint64_t next_sequence_ = 0;
  std::priority_queue<Scheduled, std::vector<Scheduled>, Later> queue_;
  std::vector<TraceEntry>* trace_ = nullptr;
};

}  // namespace ponsim
