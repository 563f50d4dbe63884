#include "ponsim/engine.hpp"

#include <stdexcept>
#include <string>

namespace ponsim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::TaskArrival:
      return "task-arrival";
    case EventKind::TransferComplete:
      return "transfer-complete";
    case EventKind::ExecutionComplete:
      return "execution-complete";
    case EventKind::ContainerDeployed:
      return "container-deployed";
    case EventKind::ProfileStateChange:
      return "profile-state-change";
    case EventKind::SimulationEnd:
      return "simulation-end";
  }
  return "unknown";
}

std::uint64_t Engine::schedule(SimTime fire_time, EventKind kind,
                               std::uint64_t payload,
                               std::function<void()> action) {
  if (fire_time < now_) {
    throw std::logic_error("event scheduled in the past: t=" +
                           std::to_string(fire_time) + " < now=" +
                           std::to_string(now_));
  }
  std::uint64_t seq = next_sequence_++;
  queue_.push(Scheduled{fire_time, seq, kind, payload, std::move(action)});
  return seq;
}

RunSummary Engine::run(SimTime until) {
  RunSummary summary;
  while (!queue_.empty() && queue_.top().fire_time <= until) {
    // priority_queue::top is const; move out via const_cast before pop.
    Scheduled ev = std::move(const_cast<Scheduled&>(queue_.top()));
    queue_.pop();
    now_ = ev.fire_time;
    if (trace_ != nullptr) {
      trace_->push_back(TraceEntry{ev.fire_time, ev.kind, ev.payload});
    }
    if (ev.action) ev.action();
    ++summary.events_processed;
  }
  now_ = until;
  summary.end_time = now_;
  return summary;
}

}  // namespace ponsim
