#include "ponsim/harness.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ponsim {

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

ResultRow base_row(const ScenarioConfig& cfg, std::uint64_t seed) {
  ResultRow row;
  row.scenario = cfg.name;
  row.deployment = to_string(cfg.deployment_model);
  row.placement = cfg.policy.placement_string();
  row.offloading = cfg.policy.offloading_string();
  row.seed = seed;
  row.olt_count = cfg.topology.olt_count;
  row.users = cfg.total_users();
  row.edge_mips = cfg.topology.vm.mips_per_core;
  return row;
}

/// Means of the "all" rows of one combo; identification columns from the
/// first row.
ResultRow mean_row(const std::vector<ResultRow>& runs) {
  ResultRow m = runs.front();
  m.row_kind = "mean";
  m.seed = 0;
  double tsr = 0.0, lat = 0.0, norm = 0.0, energy = 0.0, wall = 0.0;
  int tsr_n = 0, lat_n = 0, norm_n = 0;
  m.submitted = m.success = m.slo_miss = m.rejected = m.in_flight = 0;
  m.placement_failures = 0;
  m.events = 0;
  m.peak_memory_mb = 0.0;
  for (const ResultRow& r : runs) {
    m.submitted += r.submitted;
    m.success += r.success;
    m.slo_miss += r.slo_miss;
    m.rejected += r.rejected;
    m.in_flight += r.in_flight;
    m.placement_failures += r.placement_failures;
    m.events += r.events;
    energy += r.energy_j;
    wall += r.wall_clock_s;
    m.peak_memory_mb = std::max(m.peak_memory_mb, r.peak_memory_mb);
    if (!std::isnan(r.tsr)) tsr += r.tsr, ++tsr_n;
    if (!std::isnan(r.mean_latency_s)) lat += r.mean_latency_s, ++lat_n;
    if (!std::isnan(r.normalized_latency)) norm += r.normalized_latency,
        ++norm_n;
  }
  double n = static_cast<double>(runs.size());
  m.tsr = tsr_n ? tsr / tsr_n : NAN;
  m.mean_latency_s = lat_n ? lat / lat_n : NAN;
  m.normalized_latency = norm_n ? norm / norm_n : NAN;
  m.energy_j = energy / n;
  m.wall_clock_s = wall / n;
  return m;
}

/// Runs `jobs` scenario+seed pairs, in parallel when threads > 1; slot i of
/// the result always holds job i's rows.
std::vector<std::vector<ResultRow>> run_jobs(
    const std::vector<std::pair<ScenarioConfig, std::uint64_t>>& jobs,
    int threads, bool include_apps) {
  std::vector<std::vector<ResultRow>> out(jobs.size());
  auto work = [&](std::size_t i) {
    RunResult result = run_once(jobs[i].first, jobs[i].second);
    out[i] = rows_from_run(jobs[i].first, jobs[i].second, result,
                           include_apps);
  };
  if (threads <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int n = std::min<int>(threads, static_cast<int>(jobs.size()));
  for (int t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs.size();
           i = next.fetch_add(1))
        work(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

std::vector<ResultRow> flatten(
    const std::vector<std::vector<ResultRow>>& per_job) {
  std::vector<ResultRow> rows;
  for (const auto& job : per_job)
    rows.insert(rows.end(), job.begin(), job.end());
  return rows;
}

}  // namespace

RunResult run_once(const ScenarioConfig& config, std::uint64_t seed) {
  Simulation sim(config, seed);
  return sim.run();
}

std::vector<ResultRow> rows_from_run(const ScenarioConfig& config,
                                     std::uint64_t seed,
                                     const RunResult& result,
                                     bool include_apps) {
  const MetricsLedger& m = result.ledger;
  ResultRow all = base_row(config, seed);
  all.submitted = m.submitted();
  all.rejected = m.failed();
  all.in_flight = m.in_flight();
  all.tsr = m.tsr().value_or(NAN);
  all.mean_latency_s = m.mean_latency().value_or(NAN);
  all.normalized_latency = m.normalized_latency().value_or(NAN);
  all.energy_j = m.energy_total();
  all.placement_failures = m.placement_failures;
  all.wall_clock_s = result.wall_clock_s;
  all.peak_memory_mb = result.peak_memory_mb;
  all.events = result.summary.events_processed;

  std::vector<ResultRow> rows;
  for (const AppAggregate& agg : m.per_app()) {
    all.success += agg.success;
    all.slo_miss += agg.slo_miss;
  }
  rows.push_back(all);
  if (!include_apps) return rows;
  for (std::size_t a = 0; a < m.per_app().size(); ++a) {
    const AppAggregate& agg = m.per_app()[a];
    ResultRow row = base_row(config, seed);
    row.app = agg.app_name;
    row.submitted = agg.submitted;
    row.success = agg.success;
    row.slo_miss = agg.slo_miss;
    row.rejected = agg.rejected;
    row.in_flight = agg.in_flight;
    row.tsr = m.tsr_app(static_cast<int>(a)).value_or(NAN);
    row.mean_latency_s = agg.mean_latency().value_or(NAN);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> run_single(const ScenarioConfig& config, int reps) {
  std::vector<std::pair<ScenarioConfig, std::uint64_t>> jobs;
  for (int r = 0; r < reps; ++r) jobs.emplace_back(config, config.seed + r);
  auto per_job = run_jobs(jobs, 1, /*include_apps=*/true);
  std::vector<ResultRow> rows = flatten(per_job);
  if (reps > 1) {
    std::vector<ResultRow> all_rows;
    for (const auto& job : per_job) all_rows.push_back(job.front());
    rows.push_back(mean_row(all_rows));
  }
  return rows;
}

std::vector<ResultRow> run_policy_grid(const ScenarioConfig& config,
                                       const std::vector<DeploymentModel>& models,
                                       int reps, int threads,
                                       const std::string& placement_filter,
                                       const std::string& offloading_filter) {
  static const PlacementAlgorithm kPlace[] = {
      PlacementAlgorithm::RoundRobin, PlacementAlgorithm::CpuGreedy,
      PlacementAlgorithm::TradeOff, PlacementAlgorithm::MultiObjective};
  static const PlacementVariant kVariant[] = {PlacementVariant::Standard,
                                              PlacementVariant::LatencyBased,
                                              PlacementVariant::RateBased};
  static const OffloadAlgorithm kOffload[] = {OffloadAlgorithm::RoundRobin,
                                              OffloadAlgorithm::BestLatency,
                                              OffloadAlgorithm::BestDelay};
  static const OffloadMode kMode[] = {OffloadMode::Static,
                                      OffloadMode::Dynamic};

  std::vector<std::pair<ScenarioConfig, std::uint64_t>> jobs;
  for (DeploymentModel model : models)
    for (auto pa : kPlace)
      for (auto pv : kVariant)
        for (auto oa : kOffload)
          for (auto om : kMode) {
            ScenarioConfig cfg = config;
            cfg.deployment_model = model;
            cfg.policy.placement_algorithm = pa;
            cfg.policy.placement_variant = pv;
            cfg.policy.offload_algorithm = oa;
            cfg.policy.offload_mode = om;
            if (!placement_filter.empty() &&
                cfg.policy.placement_string() != placement_filter)
              continue;
            if (!offloading_filter.empty() &&
                cfg.policy.offloading_string() != offloading_filter)
              continue;
            for (int r = 0; r < reps; ++r)
              jobs.emplace_back(cfg, config.seed + r);
          }
  return flatten(run_jobs(jobs, threads, /*include_apps=*/false));
}

std::vector<ResultRow> run_capacity_sweep(const ScenarioConfig& config,
                                          const std::vector<double>& mips,
                                          int reps, int threads) {
  std::vector<std::pair<ScenarioConfig, std::uint64_t>> jobs;
  for (double m : mips) {
    ScenarioConfig cfg = config;
    cfg.topology.olt.mips_per_core = m;
    cfg.topology.vm.mips_per_core = m;
    for (int r = 0; r < reps; ++r) jobs.emplace_back(cfg, config.seed + r);
  }
  return flatten(run_jobs(jobs, threads, /*include_apps=*/false));
}

ScenarioConfig scale_users(const ScenarioConfig& config, int target_users) {
  ScenarioConfig cfg = config;
  double factor =
      static_cast<double>(target_users) / config.total_users();
  for (auto& app : cfg.applications) {
    app.user_count = std::max(
        1, static_cast<int>(std::lround(app.user_count * factor)));
    app.container.replica_count = std::max(
        1, static_cast<int>(
               std::ceil(app.user_count * app.task_rate_per_min / 60.0)));
  }
  cfg.topology.ont_count = cfg.total_users();
  return cfg;
}

std::vector<ResultRow> run_scalability(const ScenarioConfig& config,
                                       const std::string& axis,
                                       const std::vector<int>& values,
                                       int reps, int threads) {
  std::vector<std::pair<ScenarioConfig, std::uint64_t>> jobs;
  for (int v : values) {
    ScenarioConfig cfg = config;
    if (axis == "olts") {
      cfg.topology.olt_count = v;
    } else if (axis == "users") {
      cfg = scale_users(config, v);
    } else {
      throw std::invalid_argument("unknown scalability axis: " + axis);
    }
    for (int r = 0; r < reps; ++r) jobs.emplace_back(cfg, config.seed + r);
  }
  return flatten(run_jobs(jobs, threads, /*include_apps=*/false));
}

std::string to_csv(const std::vector<ResultRow>& rows, bool include_timing) {
  std::ostringstream out;
  out << "row,scenario,deployment,placement,offloading,seed,olt_count,users,"
         "edge_mips,app,submitted,success,slo_miss,rejected,in_flight,tsr,"
         "mean_latency_s,normalized_latency,energy_j,placement_failures,"
         "events";
  if (include_timing) out << ",wall_clock_s,peak_memory_mb";
  out << '\n';
  for (const ResultRow& r : rows) {
    out << r.row_kind << ',' << r.scenario << ',' << r.deployment << ','
        << r.placement << ',' << r.offloading << ',' << r.seed << ','
        << r.olt_count << ',' << r.users << ',' << fmt(r.edge_mips) << ','
        << r.app << ',' << r.submitted << ',' << r.success << ','
        << r.slo_miss << ',' << r.rejected << ',' << r.in_flight << ','
        << fmt(r.tsr) << ',' << fmt(r.mean_latency_s) << ','
        << fmt(r.normalized_latency) << ',' << fmt(r.energy_j) << ','
        << r.placement_failures << ',' << r.events;
    if (include_timing)
      out << ',' << fmt(r.wall_clock_s) << ',' << fmt(r.peak_memory_mb);
    out << '\n';
  }
  return out.str();
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows,
               bool include_timing) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_csv(rows, include_timing);
}

}  // namespace ponsim
