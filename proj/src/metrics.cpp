#include "ponsim/metrics.hpp"

#include <stdexcept>

namespace ponsim {

const char* to_string(TaskOutcome outcome) {
  switch (outcome) {
    case TaskOutcome::InFlight:
      return "in_flight";
    case TaskOutcome::Success:
      return "success";
    case TaskOutcome::SloMiss:
      return "slo_miss";
    case TaskOutcome::Rejected:
      return "rejected";
  }
  return "unknown";
}

void MetricsLedger::set_apps(std::vector<std::string> names,
                             std::vector<double> slos) {
  if (names.size() != slos.size())
    throw std::invalid_argument("set_apps: size mismatch");
  per_app_.clear();
  per_app_.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    AppAggregate a;
    a.app_name = std::move(names[i]);
    a.slo_s = slos[i];
    per_app_.push_back(std::move(a));
  }
}

TaskRecord& MetricsLedger::open_task(TaskId id, int app_index, NodeId device,
                                     double created_at, double deadline) {
  TaskRecord rec;
  rec.task_id = id;
  rec.app_index = app_index;
  rec.device = device;
  rec.created_at = created_at;
  rec.deadline = deadline;
  index_.emplace(id, records_.size());
  records_.push_back(rec);
  return records_.back();
}

void MetricsLedger::finalize() {
  if (finalized_) return;
  finalized_ = true;
  for (auto& agg : per_app_) {
    agg.submitted = agg.success = agg.slo_miss = agg.rejected = 0;
    agg.in_flight = agg.delivered = 0;
    agg.latency_sum_s = 0.0;
  }
  for (TaskRecord& rec : records_) {
    if (rec.app_index < 0 ||
        static_cast<std::size_t>(rec.app_index) >= per_app_.size())
      continue;
    AppAggregate& agg = per_app_[rec.app_index];
    ++agg.submitted;
    switch (rec.outcome) {
      case TaskOutcome::Success:
        ++agg.success;
        break;
      case TaskOutcome::SloMiss:
        ++agg.slo_miss;
        break;
      case TaskOutcome::Rejected:
        ++agg.rejected;
        break;
      case TaskOutcome::InFlight:
        ++agg.in_flight;
        break;
    }
    if (rec.delivered()) {
      ++agg.delivered;
      agg.latency_sum_s += rec.end_to_end();
    }
  }
}

std::uint64_t MetricsLedger::completed() const {
  std::uint64_t n = 0;
  for (const auto& r : records_)
    if (r.outcome == TaskOutcome::Success || r.outcome == TaskOutcome::SloMiss)
      ++n;
  return n;
}

std::uint64_t MetricsLedger::failed() const {
  std::uint64_t n = 0;
  for (const auto& r : records_)
    if (r.outcome == TaskOutcome::Rejected) ++n;
  return n;
}

std::uint64_t MetricsLedger::in_flight() const {
  std::uint64_t n = 0;
  for (const auto& r : records_)
    if (r.outcome == TaskOutcome::InFlight) ++n;
  return n;
}

std::optional<double> MetricsLedger::tsr() const {
  if (records_.empty()) return std::nullopt;
  std::uint64_t ok = 0;
  for (const auto& r : records_)
    if (r.outcome == TaskOutcome::Success) ++ok;
  return static_cast<double>(ok) / static_cast<double>(records_.size());
}

std::optional<double> MetricsLedger::tsr_app(int app_index) const {
  std::uint64_t ok = 0;
  std::uint64_t total = 0;
  for (const auto& r : records_) {
    if (r.app_index != app_index) continue;
    ++total;
    if (r.outcome == TaskOutcome::Success) ++ok;
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(ok) / static_cast<double>(total);
}

std::optional<double> MetricsLedger::mean_latency() const {
  double sum = 0.0;
  std::uint64_t n = 0;
  for (const auto& r : records_) {
    if (!r.delivered()) continue;
    sum += r.end_to_end();
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> MetricsLedger::normalized_latency() const {
  double sum = 0.0;
  int apps = 0;
  for (const auto& agg : per_app_) {
    auto mean = agg.mean_latency();
    if (!mean || agg.slo_s <= 0.0) continue;
    sum += *mean / agg.slo_s;
    ++apps;
  }
  if (apps == 0) return std::nullopt;
  return sum / apps;
}

}  // namespace ponsim
