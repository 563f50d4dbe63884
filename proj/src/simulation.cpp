#include "ponsim/simulation.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ponsim {

double process_peak_memory_mb() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream fields(line.substr(6));
      double kb = 0.0;
      fields >> kb;
      return kb / 1000.0;
    }
  }
  return 0.0;
}

Simulation::Simulation(ScenarioConfig config, std::uint64_t seed)
    : config_(std::move(config)),
      topo_(Topology::build(config_.topology)),
      rng_(seed),
      network_(engine_, topo_, ledger_),
      pool_(engine_, topo_, network_, ledger_) {
  std::vector<std::string> names;
  std::vector<double> slos;
  for (const auto& app : config_.applications) {
    names.push_back(app.name);
    slos.push_back(app.max_latency_s);
  }
  ledger_.set_apps(std::move(names), std::move(slos));

  build_profiles();
  orch_ = std::make_unique<Orchestrator>(topo_, pool_, config_.policy,
                                         config_.deployment_model,
                                         &config_.applications,
                                         &devices_per_app_);
  app_ready_.assign(config_.applications.size(), false);
  generators_.resize(profiles_.size());
}

void Simulation::build_profiles() {
  devices_per_app_.assign(config_.applications.size(), {});
  if (config_.profiles.empty()) {
    std::size_t cursor = 0;
    for (std::size_t a = 0; a < config_.applications.size(); ++a) {
      const ApplicationSpec& app = config_.applications[a];
      for (int u = 0; u < app.user_count; ++u) {
        if (cursor >= topo_.devices().size())
          throw ConfigError("not enough ONTs/devices for " +
                            std::to_string(config_.total_users()) + " users");
        UserProfile p;
        p.device = topo_.devices()[cursor++];
        p.app_index = static_cast<int>(a);
        p.profile_index = static_cast<int>(profiles_.size());
        p.pattern = app.pattern;
        p.task_rate_per_min = app.task_rate_per_min;
        p.active_duration_s = config_.workload.active_duration_s;
        p.idle_duration_s = config_.workload.idle_duration_s;
        profiles_.push_back(p);
      }
    }
  } else {
    for (UserProfile p : config_.profiles) {
      if (p.device >= topo_.devices().size())
        throw ConfigError("profile device_index out of range");
      const ApplicationSpec& app = config_.applications.at(p.app_index);
      p.device = topo_.devices()[p.device];
      p.profile_index = static_cast<int>(profiles_.size());
      p.pattern = app.pattern;
      p.task_rate_per_min = app.task_rate_per_min;
      profiles_.push_back(p);
    }
  }
  for (const UserProfile& p : profiles_)
    devices_per_app_[p.app_index].push_back(p.device);
}

void Simulation::deploy_containers() {
  auto requests =
      emit_container_requests(config_.applications, devices_per_app_);
  for (const DeploymentRequest& req : requests) {
    auto node = orch_->place(req.app_index, engine_.now());
    if (!node) {
      ++ledger_.placement_failures;
      continue;
    }
    ContainerSpec spec = config_.applications[req.app_index].container;
    std::vector<NodeId> subscribers;
    if (req.subscriber != kInvalidNode) subscribers.push_back(req.subscriber);
    NodeId bound_device = req.subscriber;
    pool_.admit_container(
        spec, req.app_index, *node, std::move(subscribers),
        [this, bound_device](InstanceId inst) {
          if (bound_device != kInvalidNode)
            orch_->bind_private(bound_device, inst);
          on_instance_running(inst);
        });
  }
}

void Simulation::on_instance_running(InstanceId inst_id) {
  const ContainerInstance& inst = pool_.instance(inst_id);
  orch_->register_running(inst_id);

  // Fire-and-forget registration notice to the serving broker.
  double size_mb = kb_to_mb(config_.policy.control_message_kb);
  NodeId broker = topo_.broker_of(topo_.olt_of(inst.host));
  network_.start_transfer(inst.host, broker, size_mb, TransferKind::Control,
                          [] {});

  int app = inst.app_index;
  if (!app_ready_[app]) {
    app_ready_[app] = true;
    for (const UserProfile& p : profiles_)
      if (p.app_index == app) start_profile(p);
  }
}

void Simulation::start_profile(const UserProfile& profile) {
  int idx = profile.profile_index;
  auto& rng =
      rng_.substream("profile:" + std::to_string(idx));
  UserProfile anchored = profile;
  anchored.start_time_s = std::max(profile.start_time_s, engine_.now());
  if (config_.workload.stagger_starts) {
    double mean_gap = 60.0 / profile.task_rate_per_min;
    std::uniform_real_distribution<double> offset(0.0, mean_gap);
    anchored.start_time_s += offset(rng);
  }
  generators_[idx] =
      std::make_unique<ArrivalGenerator>(anchored, rng, config_.duration_s);
  schedule_next_arrival(idx);
}

void Simulation::schedule_next_arrival(int profile_index) {
  auto when = generators_[profile_index]->next();
  if (!when) return;
  engine_.schedule(*when, EventKind::TaskArrival,
                   static_cast<std::uint64_t>(profile_index), [this,
                                                               profile_index] {
                     spawn_task(profiles_[profile_index]);
                     schedule_next_arrival(profile_index);
                   });
}

void Simulation::spawn_task(const UserProfile& profile) {
  const ApplicationSpec& app = config_.applications[profile.app_index];
  TaskId id = next_task_id_++;
  ledger_.open_task(id, profile.app_index, profile.device, engine_.now(),
                    engine_.now() + app.max_latency_s);

  NodeId broker = topo_.broker_of(topo_.olt_of(profile.device));
  network_.start_transfer(profile.device, broker,
                          kb_to_mb(config_.policy.control_message_kb),
                          TransferKind::Control, [this, id, &profile] {
                            engine_.schedule_in(
                                config_.policy.broker_lookup_latency_s,
                                EventKind::TaskArrival, id,
                                [this, id, &profile] {
                                  resolve_at_broker(id, profile);
                                });
                          });
}

void Simulation::resolve_at_broker(TaskId task, const UserProfile& profile) {
  ledger_.record(task).broker_resolved = engine_.now();
  auto inst = orch_->offload(profile.device, profile.app_index);
  if (!inst) {
    ledger_.record(task).outcome = TaskOutcome::Rejected;
    return;
  }
  NodeId host = pool_.instance(*inst).host;
  if (config_.queue_cap > 0 &&
      pool_.state(host).pending_tasks >= config_.queue_cap) {
    ledger_.record(task).outcome = TaskOutcome::Rejected;
    return;
  }
  dispatch(task, profile, *inst);
}

void Simulation::dispatch(TaskId task, const UserProfile& profile,
                          InstanceId inst) {
  const ApplicationSpec& app = config_.applications[profile.app_index];
  NodeId host = pool_.instance(inst).host;
  pool_.instance(inst).assigned_task_count += 1;
  network_.start_transfer(
      profile.device, host, kb_to_mb(app.request_kb), TransferKind::TaskRequest,
      [this, task, &profile, inst, host, &app] {
        TaskRecord& rec = ledger_.record(task);
        rec.request_arrived = engine_.now();
        if (pool_.instance(inst).state != InstanceState::Running) {
          if (pool_.instance(inst).assigned_task_count > 0)
            pool_.instance(inst).assigned_task_count -= 1;
          rec.outcome = TaskOutcome::Rejected;
          return;
        }
        auto times = pool_.execute(
            inst, app.task_length_mi, kb_to_mb(app.request_kb),
            kb_to_mb(app.response_kb), [this, task, &profile, host,
                                        &app](SimTime) {
              network_.start_transfer(
                  host, profile.device, kb_to_mb(app.response_kb),
                  TransferKind::TaskResponse, [this, task] {
                    TaskRecord& r = ledger_.record(task);
                    r.response_delivered = engine_.now();
                    r.outcome = r.response_delivered <= r.deadline
                                    ? TaskOutcome::Success
                                    : TaskOutcome::SloMiss;
                  });
            });
        rec.execution_started = times.started;
        rec.execution_finished = times.finished;
      });
}

RunResult Simulation::run() {
  if (ran_) throw std::logic_error("Simulation::run called twice");
  ran_ = true;
  auto t0 = std::chrono::steady_clock::now();

  deploy_containers();
  RunSummary summary = engine_.run(config_.duration_s);
  pool_.finalize_energy(config_.duration_s);
  ledger_.finalize();

  auto t1 = std::chrono::steady_clock::now();
  RunResult result;
  result.ledger = std::move(ledger_);
  result.summary = summary;
  result.wall_clock_s = std::chrono::duration<double>(t1 - t0).count();
  result.peak_memory_mb = process_peak_memory_mb();
  return result;
}

}  // namespace ponsim
