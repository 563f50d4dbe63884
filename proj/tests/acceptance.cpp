// Acceptance gate: one pass/fail line per criterion (A1..A9).
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ponsim/cli.hpp"
#include "ponsim/harness.hpp"
#include "ponsim/orchestration.hpp"
#include "ponsim/scenario.hpp"
#include "ponsim/simulation.hpp"

using namespace ponsim;

namespace {

int g_failures = 0;

void report(const char* id, bool ok, const std::string& detail = "") {
  if (!ok) ++g_failures;
  std::printf("%s: %s%s%s\n", id, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int worker_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// ---------------------------------------------------------------------------
// A1: analytic single-task oracle. One user, one VM, no contention; the
// end-to-end latency has a closed form:
//   lookup control leg + broker lookup + request leg + service
//   + hypervisor mediation + response leg,
// where each network leg is drain (8 * size / bottleneck) + path latency.

void check_a1() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  double worst = 0.0;

  for (int iter = 0; iter < 20; ++iter) {
    ScenarioConfig cfg;
    cfg.topology.olt_count = 1;
    cfg.topology.vms_per_olt = 1;
    cfg.topology.ont_count = 1;
    cfg.topology.vm.mips_per_core = 5000.0 + u(rng) * 95000.0;
    cfg.topology.device_ont = {1e-5 + u(rng) * 2e-3, 50.0 + u(rng) * 950.0};
    cfg.topology.ont_olt = {1e-5 + u(rng) * 2e-3, 50.0 + u(rng) * 950.0};
    cfg.topology.olt_vm = {1e-4 + u(rng) * 5e-3, 50.0 + u(rng) * 950.0};
    cfg.topology.hypervisor = {1e-4 + u(rng) * 9e-4, 10000.0};

    ApplicationSpec app;
    app.name = "probe";
    app.user_count = 1;
    app.task_rate_per_min = 2.0;  // 30 s gaps: tasks never overlap
    app.max_latency_s = 100.0;
    app.task_length_mi = 100.0 + u(rng) * 19900.0;
    app.request_kb = 1.0 + u(rng) * 499.0;
    app.response_kb = 1.0 + u(rng) * 499.0;
    app.container.replica_count = 1;
    cfg.applications.push_back(app);

    cfg.workload.stagger_starts = false;
    cfg.policy.broker_lookup_latency_s = 5e-4 + u(rng) * 4.5e-3;
    cfg.policy.control_message_kb = 0.5 + u(rng) * 3.5;
    cfg.duration_s = 150.0;

    Simulation sim(cfg, 1);
    RunResult res = sim.run();

    const TopologySpec& t = cfg.topology;
    auto leg = [](double size_mb, std::initializer_list<LinkParams> links) {
      double bottleneck = std::numeric_limits<double>::infinity();
      double lat = 0.0;
      for (const LinkParams& l : links) {
        bottleneck = std::min(bottleneck, l.bandwidth_mbps);
        lat += l.latency_s;
      }
      return size_mb * 8.0 / bottleneck + lat;
    };
    double ctrl = leg(kb_to_mb(cfg.policy.control_message_kb),
                      {t.device_ont, t.ont_olt, t.broker});
    double req = leg(kb_to_mb(app.request_kb),
                     {t.device_ont, t.ont_olt, t.olt_vm});
    double resp = leg(kb_to_mb(app.response_kb),
                      {t.device_ont, t.ont_olt, t.olt_vm});
    double service = app.task_length_mi / t.vm.mips_per_core;
    double expect = ctrl + cfg.policy.broker_lookup_latency_s + req +
                    service + 2.0 * t.hypervisor.latency_s + resp;

    for (const TaskRecord& r : res.ledger.records()) {
      if (!r.delivered()) continue;
      worst = std::max(worst, std::fabs(r.end_to_end() - expect));
      ++checked;
    }
  }

  double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << checked << " tasks, max |error| " << worst << " s, " << elapsed << " s";
  report("A1", checked >= 40 && worst <= 1e-9 && elapsed < 1.0, d.str());
}

// ---------------------------------------------------------------------------
// A2: scoring functions against independently written evaluation, and
// selections against exhaustive enumeration with the documented tie rules.

bool rel_close(double a, double b) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) <= 1e-12 * scale;
}

void check_a2() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> ncand(2, 8);
  MoWeights w;
  bool ok = true;

  for (int iter = 0; iter < 1000 && ok; ++iter) {
    int n = ncand(rng);
    std::vector<PlacementCandidate> pc(n);
    std::vector<OffloadCandidate> oc(n);
    for (int i = 0; i < n; ++i) {
      pc[i].node = static_cast<NodeId>(i);
      pc[i].cores = 1 + static_cast<int>(u(rng) * 8);
      pc[i].mips = 5000.0 + u(rng) * 95000.0;
      pc[i].ram_tot = 8192.0;
      pc[i].ram_avail = u(rng) * pc[i].ram_tot;
      pc[i].stor_tot = 65536.0;
      pc[i].stor_avail = u(rng) * pc[i].stor_tot;
      pc[i].busy_cores = static_cast<int>(u(rng) * pc[i].cores);
      pc[i].container_count = static_cast<int>(u(rng) * 6.0);
      pc[i].t_trade_off = 0.5 + u(rng) * 1.5;
      pc[i].t_multi_objective = u(rng);

      oc[i].instance = static_cast<InstanceId>(i);
      oc[i].net_latency_s = (iter % 3 == 0) ? 0.003 : u(rng) * 0.01;
      oc[i].assigned_tasks = static_cast<int>(u(rng) * 5.0);
      oc[i].pending_mi = (iter % 2 == 0) ? 0.0 : u(rng) * 50000.0;
      oc[i].mips = pc[i].mips;
      oc[i].cores = pc[i].cores;
    }
    double mi = 100.0 + u(rng) * 10000.0;

    // Score closed forms, written out independently of the library.
    for (int i = 0; i < n && ok; ++i) {
      ok = ok && rel_close(score_cpu_greedy(pc[i].container_count,
                                            pc[i].cores),
                           double(pc[i].container_count) / pc[i].cores);
      ok = ok &&
           rel_close(score_trade_off(pc[i].container_count, pc[i].t_trade_off,
                                     mi, pc[i].mips),
                     (2.0 * pc[i].container_count + 1.0) * pc[i].t_trade_off *
                         mi / pc[i].mips);
      double mips_max = 0.0;
      for (const auto& c : pc) mips_max = std::max(mips_max, c.mips);
      double avail = w.w_ram * (pc[i].ram_avail / pc[i].ram_tot) +
                     w.w_storage * (pc[i].stor_avail / pc[i].stor_tot) +
                     w.w_cores * (double(pc[i].cores - pc[i].busy_cores) /
                                  pc[i].cores) +
                     w.w_mips * (pc[i].mips / mips_max);
      ok = ok && rel_close(
                     score_multi_objective(
                         pc[i].ram_avail, pc[i].ram_tot, pc[i].stor_avail,
                         pc[i].stor_tot, pc[i].cores - pc[i].busy_cores,
                         pc[i].cores, pc[i].mips, mips_max, w,
                         pc[i].container_count, pc[i].t_multi_objective),
                     avail - pc[i].container_count - pc[i].t_multi_objective);
      ok = ok && rel_close(score_best_delay(oc[i].net_latency_s,
                                            oc[i].pending_mi, mi, oc[i].mips,
                                            oc[i].cores),
                           oc[i].net_latency_s +
                               (oc[i].pending_mi / oc[i].mips +
                                mi / oc[i].mips) /
                                   oc[i].cores);
    }
    if (!ok) break;

    // Selection enumeration. Tie rules: cpu-greedy prefers more cores then
    // lowest id; trade-off / multi-objective lowest id; best-latency and
    // best-delay prefer fewest assigned tasks then lowest id.
    {
      std::size_t want = 0;
      for (std::size_t i = 1; i < pc.size(); ++i) {
        double fi = double(pc[i].container_count) / pc[i].cores;
        double fw = double(pc[want].container_count) / pc[want].cores;
        if (fi < fw || (fi == fw && pc[i].cores > pc[want].cores)) want = i;
      }
      ok = ok && select_cpu_greedy(pc) == want;
    }
    {
      std::size_t want = 0;
      auto f = [&](const PlacementCandidate& c) {
        return (2.0 * c.container_count + 1.0) * c.t_trade_off * mi / c.mips;
      };
      for (std::size_t i = 1; i < pc.size(); ++i)
        if (f(pc[i]) < f(pc[want])) want = i;
      ok = ok && select_trade_off(pc, mi) == want;
    }
    {
      double mips_max = 0.0;
      for (const auto& c : pc) mips_max = std::max(mips_max, c.mips);
      auto f = [&](const PlacementCandidate& c) {
        return w.w_ram * (c.ram_avail / c.ram_tot) +
               w.w_storage * (c.stor_avail / c.stor_tot) +
               w.w_cores * (double(c.cores - c.busy_cores) / c.cores) +
               w.w_mips * (c.mips / mips_max) - c.container_count -
               c.t_multi_objective;
      };
      std::size_t want = 0;
      for (std::size_t i = 1; i < pc.size(); ++i)
        if (f(pc[i]) > f(pc[want])) want = i;
      ok = ok && select_multi_objective(pc, w) == want;
    }
    {
      std::size_t want = 0;
      for (std::size_t i = 1; i < oc.size(); ++i)
        if (oc[i].net_latency_s < oc[want].net_latency_s ||
            (oc[i].net_latency_s == oc[want].net_latency_s &&
             oc[i].assigned_tasks < oc[want].assigned_tasks))
          want = i;
      ok = ok && select_best_latency(oc) == want;
    }
    {
      auto f = [&](const OffloadCandidate& c) {
        return c.net_latency_s +
               (c.pending_mi / c.mips + mi / c.mips) / c.cores;
      };
      std::size_t want = 0;
      for (std::size_t i = 1; i < oc.size(); ++i)
        if (f(oc[i]) < f(oc[want]) ||
            (f(oc[i]) == f(oc[want]) &&
             oc[i].assigned_tasks < oc[want].assigned_tasks))
          want = i;
      ok = ok && select_best_delay(oc, mi) == want;
    }
  }

  double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << "1000 randomized states, " << elapsed << " s";
  report("A2", ok && elapsed < 10.0, d.str());
}

// ---------------------------------------------------------------------------
// A3: byte-identical CSV for two identical mixed runs.

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void check_a3() {
  auto t0 = std::chrono::steady_clock::now();
  std::string p1 = "/tmp/ponsim_accept_a3_1.csv";
  std::string p2 = "/tmp/ponsim_accept_a3_2.csv";
  int rc1 = cli_main({"run", "--preset", "mixed", "--seed", "42",
                      "--out", p1});
  int rc2 = cli_main({"run", "--preset", "mixed", "--seed", "42",
                      "--out", p2});
  std::string c1 = slurp(p1), c2 = slurp(p2);
  bool ok = rc1 == 0 && rc2 == 0 && !c1.empty() && c1 == c2;
  std::ostringstream d;
  d << c1.size() << " bytes per run, " << seconds_since(t0) << " s";
  report("A3", ok, d.str());
}

// ---------------------------------------------------------------------------
// A4: smart-city capacity scenario keeps a perfect success ratio even on the
// slowest CPU class of the sweep.

void check_a4() {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioConfig cfg = build_preset("S1");
  cfg.deployment_model = DeploymentModel::EdgeOnly;
  cfg.duration_s = 300.0 * 60.0;
  cfg.topology.olt.mips_per_core = 20000.0;  // lowest CPU class in the sweep
  cfg.topology.vm.mips_per_core = 20000.0;
  RunResult res = run_once(cfg, 42);
  auto tsr = res.ledger.tsr();
  bool ok = tsr.has_value() && *tsr == 1.0 && res.ledger.submitted() > 10000;
  std::ostringstream d;
  d << "TSR " << (tsr ? *tsr : -1.0) << " over " << res.ledger.submitted()
    << " tasks, " << seconds_since(t0) << " s";
  report("A4", ok, d.str());
}

// ---------------------------------------------------------------------------
// A5/A6/A7 share two full policy grids over 3 seeds.

struct ComboStat {
  std::string placement, offloading;
  double tsr = 0.0, lnorm = 0.0;
};

std::vector<ComboStat> combo_means(const std::vector<ResultRow>& rows) {
  std::vector<ComboStat> out;
  for (const ResultRow& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ComboStat& c) {
      return c.placement == r.placement && c.offloading == r.offloading;
    });
    if (it == out.end()) {
      out.push_back({r.placement, r.offloading, 0.0, 0.0});
      it = out.end() - 1;
    }
    it->tsr += r.tsr;
    it->lnorm += r.normalized_latency;
  }
  for (ComboStat& c : out) {
    c.tsr /= 3.0;  // 3 seeds per combination
    c.lnorm /= 3.0;
  }
  return out;
}

ComboStat find_combo(const std::vector<ComboStat>& v, const std::string& p,
                     const std::string& o) {
  for (const ComboStat& c : v)
    if (c.placement == p && c.offloading == o) return c;
  return {};
}

void check_a567() {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioConfig cfg = build_preset("mixed");
  cfg.duration_s = 600.0;
  cfg.seed = 42;
  int threads = worker_threads();

  auto edge_rows = run_policy_grid(cfg, {DeploymentModel::EdgeOnly}, 3,
                                   threads);
  auto far_rows = run_policy_grid(cfg, {DeploymentModel::FarEdgePlusEdge}, 3,
                                  threads);
  auto edge = combo_means(edge_rows);
  auto far = combo_means(far_rows);

  // A5: every edge-only combination compliant (TSR >= 0.90, L_norm < 1).
  {
    bool ok = edge.size() == 72;
    double min_tsr = 1.0, max_lnorm = 0.0;
    for (const ComboStat& c : edge) {
      min_tsr = std::min(min_tsr, c.tsr);
      max_lnorm = std::max(max_lnorm, c.lnorm);
      if (c.tsr < 0.90 || c.lnorm >= 1.0) ok = false;
    }
    std::ostringstream d;
    d << edge.size() << " combos, min TSR " << min_tsr << ", max L_norm "
      << max_lnorm;
    report("A5", ok, d.str());
  }

  // A6: far-edge group separation between smart and naive placements.
  {
    double st = 0, sl = 0, nt = 0, nl = 0;
    int sn = 0, nn = 0;
    for (const ComboStat& c : far) {
      bool smart = c.placement.rfind("multi_objective", 0) == 0 ||
                   c.placement.rfind("trade_off", 0) == 0;
      bool naive = c.placement.rfind("round_robin", 0) == 0 ||
                   c.placement.rfind("cpu_greedy", 0) == 0;
      if (smart) { st += c.tsr; sl += c.lnorm; ++sn; }
      if (naive) { nt += c.tsr; nl += c.lnorm; ++nn; }
    }
    st /= sn; sl /= sn; nt /= nn; nl /= nn;
    bool ok = sn == 36 && nn == 36 && sl < nl && st > nt;
    std::ostringstream d;
    d << "L_norm " << sl << " vs " << nl << ", TSR " << st << " vs " << nt;
    report("A6", ok, d.str());
  }

  // A7: moving edge_only -> far_edge_plus_edge, the best policy improves on
  // both metrics while the naive one degrades on both.
  {
    auto improved = [&](const std::string& p, const std::string& o) {
      ComboStat e = find_combo(edge, p, o);
      ComboStat f = find_combo(far, p, o);
      return f.tsr > e.tsr && f.lnorm < e.lnorm;
    };
    auto degraded = [&](const std::string& p, const std::string& o) {
      ComboStat e = find_combo(edge, p, o);
      ComboStat f = find_combo(far, p, o);
      return f.tsr < e.tsr && f.lnorm > e.lnorm;
    };
    bool best_ok = improved("trade_off:standard", "best_delay:dynamic") ||
                   improved("multi_objective:standard", "best_delay:dynamic");
    bool naive_ok = degraded("round_robin:standard", "best_latency:static");
    ComboStat be = find_combo(edge, "trade_off:standard",
                              "best_delay:dynamic");
    ComboStat bf = find_combo(far, "trade_off:standard",
                              "best_delay:dynamic");
    std::ostringstream d;
    d << "best TSR " << be.tsr << "->" << bf.tsr << ", L_norm " << be.lnorm
      << "->" << bf.lnorm << ", naive " << (naive_ok ? "degrades" : "holds")
      << ", grids took " << seconds_since(t0) << " s";
    report("A7", best_ok && naive_ok, d.str());
  }
}

// ---------------------------------------------------------------------------
// A8: conservation properties on randomized mini-scenarios.

void check_a8() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  std::string why;
  std::uint64_t total_submitted = 0;

  for (int iter = 0; iter < 500 && ok; ++iter) {
    ScenarioConfig cfg;
    cfg.topology.olt_count = 1 + static_cast<int>(u(rng) * 2.0);
    cfg.topology.vms_per_olt = 1 + static_cast<int>(u(rng) * 3.0);
    int napps = 1 + static_cast<int>(u(rng) * 2.0);
    int users = 0;
    for (int a = 0; a < napps; ++a) {
      ApplicationSpec app;
      app.name = "app" + std::to_string(a);
      app.user_count = 1 + static_cast<int>(u(rng) * 4.0);
      app.task_rate_per_min = 20.0 + u(rng) * 180.0;
      app.max_latency_s = 0.02 + u(rng) * 0.48;
      app.task_length_mi = 100.0 + u(rng) * 7900.0;
      app.request_kb = 1.0 + u(rng) * 199.0;
      app.response_kb = 1.0 + u(rng) * 199.0;
      int pk = static_cast<int>(u(rng) * 3.0);
      app.pattern.kind = pk == 0   ? PatternKind::Periodic
                         : pk == 1 ? PatternKind::Random
                                   : PatternKind::Bursty;
      app.pattern.burst_size = 2 + static_cast<int>(u(rng) * 3.0);
      app.pattern.burst_interval_s = 1.0 + u(rng) * 4.0;
      app.container.ram_mb = 128.0 + u(rng) * 512.0;
      app.container.replica_count = 1 + static_cast<int>(u(rng) * 3.0);
      users += app.user_count;
      cfg.applications.push_back(app);
    }
    cfg.topology.ont_count = users;
    cfg.deployment_model = u(rng) < 0.5 ? DeploymentModel::EdgeOnly
                                        : DeploymentModel::FarEdgePlusEdge;
    const char* placements[] = {"round_robin", "cpu_greedy", "trade_off",
                                "multi_objective"};
    const char* variants[] = {"standard", "latency", "rate"};
    const char* offloads[] = {"round_robin", "best_latency", "best_delay"};
    cfg.policy.set_placement(
        std::string(placements[static_cast<int>(u(rng) * 4.0)]) + ":" +
        variants[static_cast<int>(u(rng) * 3.0)]);
    cfg.policy.set_offloading(
        std::string(offloads[static_cast<int>(u(rng) * 3.0)]) + ":" +
        (u(rng) < 0.5 ? "static" : "dynamic"));
    cfg.queue_cap = u(rng) < 0.3 ? 1 + static_cast<int>(u(rng) * 5.0) : 0;
    cfg.duration_s = 10.0 + u(rng) * 20.0;

    Simulation sim(cfg, static_cast<std::uint64_t>(iter + 1));
    bool rates_ok = true;
    sim.network().audit = [&](const Network& n) {
      for (const Link& l : sim.topology().links())
        if (n.rate_sum(l.id) > l.bandwidth_mbps * (1.0 + 1e-9))
          rates_ok = false;
    };
    // Snapshot resource totals before the run mutates them.
    RunResult res = sim.run();
    const MetricsLedger& m = res.ledger;

    total_submitted += m.submitted();
    if (m.submitted() != m.completed() + m.failed() + m.in_flight()) {
      ok = false;
      why = "task conservation violated";
    }
    if (!rates_ok) {
      ok = false;
      why = "link rate capacity violated";
    }
    for (const Node& node : sim.topology().nodes()) {
      if (!is_compute_capable(node.kind)) continue;
      const NodeState& s = sim.pool().state(node.id);
      double resident_ram = 0.0, resident_stor = 0.0;
      for (const ContainerInstance& inst : sim.pool().instances()) {
        if (inst.host != node.id || inst.state == InstanceState::Removed)
          continue;
        resident_ram += inst.spec.ram_mb;
        resident_stor += inst.spec.storage_mb;
      }
      if (std::fabs(s.available_ram_mb + resident_ram - node.spec.ram_mb) >
              1e-6 ||
          std::fabs(s.available_storage_mb + resident_stor -
                    node.spec.storage_mb) > 1e-6) {
        ok = false;
        why = "resource conservation violated on " + node.name;
      }
    }
    for (const TaskRecord& r : m.records()) {
      auto mono = [](double a, double b) {
        return std::isnan(a) || std::isnan(b) || b >= a;
      };
      if (!(mono(r.created_at, r.broker_resolved) &&
            mono(r.broker_resolved, r.request_arrived) &&
            mono(r.request_arrived, r.execution_started) &&
            mono(r.execution_started, r.execution_finished) &&
            mono(r.execution_finished, r.response_delivered))) {
        ok = false;
        why = "timestamps not monotone";
      }
    }
  }

  double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << "500 scenarios, " << total_submitted << " tasks, " << elapsed << " s";
  if (!ok) d << ", " << why;
  report("A8", ok && total_submitted > 5000 && elapsed < 60.0, d.str());
}

// ---------------------------------------------------------------------------
// A9: wall-clock scaling shape (absolute timings are hardware-specific, so
// only growth ratios are asserted).

double min_wall(const std::vector<ResultRow>& rows, int axis_value,
                bool users_axis) {
  double best = std::numeric_limits<double>::infinity();
  for (const ResultRow& r : rows) {
    int v = users_axis ? r.users : r.olt_count;
    if (v == axis_value) best = std::min(best, r.wall_clock_s);
  }
  return best;
}

void check_a9() {
  auto t0 = std::chrono::steady_clock::now();

  // Users 100 -> 1000 on a 100-OLT plant: at most 12x wall clock.
  ScenarioConfig by_users = build_preset("S1");
  by_users.topology.olt_count = 100;
  by_users.duration_s = 3600.0;
  by_users.policy.set_offloading("round_robin:static");
  auto rows_u = run_scalability(by_users, "users", {100, 1000}, 2);
  double w100 = min_wall(rows_u, 100, true);
  double w1000 = min_wall(rows_u, 1000, true);
  double ratio = w1000 / w100;

  // OLTs 10 -> 100 with 1,000 users: at most 50% wall-clock change.
  ScenarioConfig by_olts = scale_users(build_preset("S1"), 1000);
  by_olts.duration_s = 600.0;
  by_olts.policy.set_offloading("round_robin:static");
  auto rows_o = run_scalability(by_olts, "olts", {10, 100}, 2);
  double o10 = min_wall(rows_o, 10, false);
  double o100 = min_wall(rows_o, 100, false);
  double change = std::fabs(o100 - o10) / o10;

  bool ok = ratio <= 12.0 && change <= 0.5;
  std::ostringstream d;
  d << "users x10 wall ratio " << ratio << ", OLT x10 wall change "
    << change * 100.0 << "%, " << seconds_since(t0) << " s";
  report("A9", ok, d.str());
}

}  // namespace

int main() {
  check_a1();
  check_a2();
  check_a3();
  check_a4();
  check_a567();
  check_a8();
  check_a9();
  return g_failures == 0 ? 0 : 1;
}
