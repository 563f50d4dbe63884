#include "ponsim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ponsim {

using nlohmann::json;

int ScenarioConfig::total_users() const {
  int n = 0;
  for (const auto& app : applications) n += app.user_count;
  return n;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config error at '" + where + "': " + what);
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed)
      if (it.key() == key) known = true;
    if (!known) fail(where, "unknown key '" + it.key() + "'");
  }
}

double get_number(const json& obj, const std::string& where, const char* key,
                  double fallback, double min_value, double max_value = 1e18) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  double x = v.get<double>();
  if (x < min_value || x > max_value)
    fail(where + "." + key, "value " + std::to_string(x) + " out of range");
  return x;
}

int get_int(const json& obj, const std::string& where, const char* key,
            int fallback, int min_value) {
  double x = get_number(obj, where, key, fallback, min_value);
  if (x != std::floor(x)) fail(where + "." + key, "expected an integer");
  return static_cast<int>(x);
}

bool get_bool(const json& obj, const std::string& where, const char* key,
              bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) fail(where + "." + key, "expected a boolean");
  return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const std::string& where,
                       const char* key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) fail(where + "." + key, "expected a string");
  return obj.at(key).get<std::string>();
}

ComputeSpec parse_compute(const json& obj, const std::string& where,
                          const ComputeSpec& defaults) {
  reject_unknown(obj, where,
                 {"cores", "mips_per_core", "ram_mb", "storage_mb",
                  "active_watts", "idle_watts"});
  ComputeSpec s = defaults;
  s.cores = get_int(obj, where, "cores", defaults.cores, 1);
  s.mips_per_core =
      get_number(obj, where, "mips_per_core", defaults.mips_per_core, 1e-9);
  s.ram_mb = get_number(obj, where, "ram_mb", defaults.ram_mb, 0.0);
  s.storage_mb = get_number(obj, where, "storage_mb", defaults.storage_mb, 0.0);
  s.active_watts =
      get_number(obj, where, "active_watts", defaults.active_watts, 0.0);
  s.idle_watts = get_number(obj, where, "idle_watts", defaults.idle_watts, 0.0);
  return s;
}

LinkParams parse_link(const json& obj, const std::string& where,
                      const LinkParams& defaults) {
  reject_unknown(obj, where, {"latency_s", "bandwidth_mbps", "energy_per_mb"});
  LinkParams p = defaults;
  p.latency_s = get_number(obj, where, "latency_s", defaults.latency_s, 0.0);
  p.bandwidth_mbps =
      get_number(obj, where, "bandwidth_mbps", defaults.bandwidth_mbps, 1e-9);
  p.energy_per_mb =
      get_number(obj, where, "energy_per_mb", defaults.energy_per_mb, 0.0);
  return p;
}

Pattern parse_pattern(const json& obj, const std::string& where,
                      const Pattern& defaults) {
  reject_unknown(obj, where, {"kind", "burst_size", "burst_interval_s"});
  Pattern p = defaults;
  std::string kind = get_string(obj, where, "kind", to_string(defaults.kind));
  if (kind == "random")
    p.kind = PatternKind::Random;
  else if (kind == "bursty")
    p.kind = PatternKind::Bursty;
  else if (kind == "periodic")
    p.kind = PatternKind::Periodic;
  else
    fail(where + ".kind", "unknown pattern '" + kind + "'");
  p.burst_size = get_int(obj, where, "burst_size", defaults.burst_size, 1);
  p.burst_interval_s = get_number(obj, where, "burst_interval_s",
                                  defaults.burst_interval_s, 1e-9);
  return p;
}

ContainerSpec parse_container(const json& obj, const std::string& where,
                              const ContainerSpec& defaults) {
  reject_unknown(obj, where,
                 {"ram_mb", "storage_mb", "image_size_mb", "shared",
                  "replica_count"});
  ContainerSpec c = defaults;
  c.ram_mb = get_number(obj, where, "ram_mb", defaults.ram_mb, 1e-9);
  c.storage_mb =
      get_number(obj, where, "storage_mb", defaults.storage_mb, 1e-9);
  c.image_size_mb =
      get_number(obj, where, "image_size_mb", defaults.image_size_mb, 0.0);
  c.shared = get_bool(obj, where, "shared", defaults.shared);
  c.replica_count =
      get_int(obj, where, "replica_count", defaults.replica_count, 1);
  return c;
}

std::map<NodeKind, double> parse_kind_weights(
    const json& obj, const std::string& where,
    const std::map<NodeKind, double>& defaults) {
  reject_unknown(obj, where, {"cloud", "olt", "vm", "ont"});
  std::map<NodeKind, double> w = defaults;
  auto set = [&](const char* key, NodeKind kind) {
    if (obj.contains(key))
      w[kind] = get_number(obj, where, key, w[kind], 0.0);
  };
  set("cloud", NodeKind::Cloud);
  set("olt", NodeKind::Olt);
  set("vm", NodeKind::Vm);
  set("ont", NodeKind::Ont);
  return w;
}

json kind_weights_json(const std::map<NodeKind, double>& w) {
  json j;
  for (const auto& [kind, value] : w) j[to_string(kind)] = value;
  return j;
}

json compute_json(const ComputeSpec& s) {
  return json{{"cores", s.cores},
              {"mips_per_core", s.mips_per_core},
              {"ram_mb", s.ram_mb},
              {"storage_mb", s.storage_mb},
              {"active_watts", s.active_watts},
              {"idle_watts", s.idle_watts}};
}

json link_json(const LinkParams& p) {
  return json{{"latency_s", p.latency_s},
              {"bandwidth_mbps", p.bandwidth_mbps},
              {"energy_per_mb", p.energy_per_mb}};
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!root.is_object()) fail("$", "top level must be an object");
  reject_unknown(root, "$",
                 {"name", "topology", "applications", "profiles", "workload",
                  "policy", "deployment_model", "duration_s", "seed",
                  "replication_count", "queue_cap"});

  ScenarioConfig cfg;
  cfg.name = get_string(root, "$", "name", "custom");

  if (root.contains("topology")) {
    const json& t = root.at("topology");
    reject_unknown(t, "topology",
                   {"olt_count", "vms_per_olt", "ont_count", "cloud", "olt",
                    "vm", "ont", "links"});
    cfg.topology.olt_count =
        get_int(t, "topology", "olt_count", cfg.topology.olt_count, 1);
    cfg.topology.vms_per_olt =
        get_int(t, "topology", "vms_per_olt", cfg.topology.vms_per_olt, 0);
    cfg.topology.ont_count =
        get_int(t, "topology", "ont_count", -1, -1);  // -1: match user count
    if (t.contains("cloud"))
      cfg.topology.cloud =
          parse_compute(t.at("cloud"), "topology.cloud", cfg.topology.cloud);
    if (t.contains("olt"))
      cfg.topology.olt =
          parse_compute(t.at("olt"), "topology.olt", cfg.topology.olt);
    if (t.contains("vm"))
      cfg.topology.vm = parse_compute(t.at("vm"), "topology.vm",
                                      cfg.topology.vm);
    if (t.contains("ont"))
      cfg.topology.ont =
          parse_compute(t.at("ont"), "topology.ont", cfg.topology.ont);
    if (t.contains("links")) {
      const json& l = t.at("links");
      reject_unknown(l, "topology.links",
                     {"device_ont", "ont_olt", "olt_cloud", "olt_vm",
                      "hypervisor", "broker"});
      auto apply = [&](const char* key, LinkParams& p) {
        if (l.contains(key))
          p = parse_link(l.at(key), std::string("topology.links.") + key, p);
      };
      apply("device_ont", cfg.topology.device_ont);
      apply("ont_olt", cfg.topology.ont_olt);
      apply("olt_cloud", cfg.topology.olt_cloud);
      apply("olt_vm", cfg.topology.olt_vm);
      apply("hypervisor", cfg.topology.hypervisor);
      apply("broker", cfg.topology.broker);
    }
  } else {
    cfg.topology.ont_count = -1;
  }

  if (!root.contains("applications") || !root.at("applications").is_array() ||
      root.at("applications").empty())
    fail("applications", "at least one application is required");
  int app_idx = 0;
  for (const json& a : root.at("applications")) {
    std::string where = "applications[" + std::to_string(app_idx++) + "]";
    reject_unknown(a, where,
                   {"name", "user_count", "task_rate_per_min", "max_latency_s",
                    "task_length_mi", "request_kb", "response_kb", "pattern",
                    "container"});
    ApplicationSpec app;
    app.name = get_string(a, where, "name",
                          "app" + std::to_string(app_idx - 1));
    app.user_count = get_int(a, where, "user_count", 1, 1);
    app.task_rate_per_min =
        get_number(a, where, "task_rate_per_min", 1.0, 1e-9);
    app.max_latency_s = get_number(a, where, "max_latency_s", 1.0, 1e-9);
    app.task_length_mi = get_number(a, where, "task_length_mi", 1000.0, 0.0);
    app.request_kb = get_number(a, where, "request_kb", 1.0, 0.0);
    app.response_kb = get_number(a, where, "response_kb", 1.0, 0.0);
    if (a.contains("pattern"))
      app.pattern = parse_pattern(a.at("pattern"), where + ".pattern", {});
    ContainerSpec cdef;
    cdef.app_id = app.name;
    // Default replica sizing follows offered load: one replica per task/s.
    cdef.replica_count = std::max(
        1, static_cast<int>(
               std::ceil(app.user_count * app.task_rate_per_min / 60.0)));
    app.container = a.contains("container")
                        ? parse_container(a.at("container"),
                                          where + ".container", cdef)
                        : cdef;
    app.container.app_id = app.name;
    cfg.applications.push_back(std::move(app));
  }

  if (cfg.topology.ont_count < 0) cfg.topology.ont_count = cfg.total_users();

  if (root.contains("workload")) {
    const json& w = root.at("workload");
    reject_unknown(w, "workload",
                   {"stagger_starts", "active_duration_s", "idle_duration_s"});
    cfg.workload.stagger_starts =
        get_bool(w, "workload", "stagger_starts", cfg.workload.stagger_starts);
    cfg.workload.active_duration_s = get_number(
        w, "workload", "active_duration_s", cfg.workload.active_duration_s,
        0.0);
    cfg.workload.idle_duration_s = get_number(
        w, "workload", "idle_duration_s", cfg.workload.idle_duration_s, 0.0);
  }

  if (root.contains("profiles")) {
    const json& ps = root.at("profiles");
    if (!ps.is_array()) fail("profiles", "expected an array");
    int pi = 0;
    for (const json& p : ps) {
      std::string where = "profiles[" + std::to_string(pi++) + "]";
      reject_unknown(p, where,
                     {"device_index", "app", "start_time_s",
                      "active_duration_s", "idle_duration_s"});
      UserProfile up;
      up.device = static_cast<NodeId>(get_int(p, where, "device_index", 0, 0));
      std::string app_name = get_string(p, where, "app", "");
      up.app_index = -1;
      for (std::size_t i = 0; i < cfg.applications.size(); ++i)
        if (cfg.applications[i].name == app_name)
          up.app_index = static_cast<int>(i);
      if (up.app_index < 0)
        fail(where + ".app", "unknown application '" + app_name + "'");
      up.start_time_s = get_number(p, where, "start_time_s", 0.0, 0.0);
      up.active_duration_s =
          get_number(p, where, "active_duration_s", 0.0, 0.0);
      up.idle_duration_s = get_number(p, where, "idle_duration_s", 0.0, 0.0);
      cfg.profiles.push_back(up);
    }
  }

  if (root.contains("policy")) {
    const json& p = root.at("policy");
    reject_unknown(p, "policy",
                   {"placement", "offloading", "trade_off_weights",
                    "multi_objective_weights", "mo_weights",
                    "broker_lookup_latency_s", "control_message_kb"});
    try {
      if (p.contains("placement"))
        cfg.policy.set_placement(
            get_string(p, "policy", "placement", ""));
      if (p.contains("offloading"))
        cfg.policy.set_offloading(
            get_string(p, "policy", "offloading", ""));
    } catch (const std::invalid_argument& e) {
      fail("policy", e.what());
    }
    if (p.contains("trade_off_weights"))
      cfg.policy.trade_off_weights =
          parse_kind_weights(p.at("trade_off_weights"),
                             "policy.trade_off_weights",
                             cfg.policy.trade_off_weights);
    if (p.contains("multi_objective_weights"))
      cfg.policy.multi_objective_weights =
          parse_kind_weights(p.at("multi_objective_weights"),
                             "policy.multi_objective_weights",
                             cfg.policy.multi_objective_weights);
    if (p.contains("mo_weights")) {
      const json& w = p.at("mo_weights");
      reject_unknown(w, "policy.mo_weights",
                     {"w_ram", "w_storage", "w_cores", "w_mips"});
      cfg.policy.mo_weights.w_ram = get_number(
          w, "policy.mo_weights", "w_ram", cfg.policy.mo_weights.w_ram, 0.0);
      cfg.policy.mo_weights.w_storage =
          get_number(w, "policy.mo_weights", "w_storage",
                     cfg.policy.mo_weights.w_storage, 0.0);
      cfg.policy.mo_weights.w_cores =
          get_number(w, "policy.mo_weights", "w_cores",
                     cfg.policy.mo_weights.w_cores, 0.0);
      cfg.policy.mo_weights.w_mips =
          get_number(w, "policy.mo_weights", "w_mips",
                     cfg.policy.mo_weights.w_mips, 0.0);
    }
    cfg.policy.broker_lookup_latency_s =
        get_number(p, "policy", "broker_lookup_latency_s",
                   cfg.policy.broker_lookup_latency_s, 0.0);
    cfg.policy.control_message_kb =
        get_number(p, "policy", "control_message_kb",
                   cfg.policy.control_message_kb, 0.0);
  }

  std::string deployment = get_string(root, "$", "deployment_model",
                                      to_string(cfg.deployment_model));
  try {
    cfg.deployment_model = parse_deployment_model(deployment);
  } catch (const std::invalid_argument& e) {
    fail("deployment_model", e.what());
  }
  cfg.duration_s = get_number(root, "$", "duration_s", cfg.duration_s, 1e-9);
  cfg.seed = static_cast<std::uint64_t>(
      get_number(root, "$", "seed", static_cast<double>(cfg.seed), 0.0));
  cfg.replication_count =
      get_int(root, "$", "replication_count", cfg.replication_count, 1);
  cfg.queue_cap = get_int(root, "$", "queue_cap", cfg.queue_cap, 0);
  return cfg;
}

ScenarioConfig parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::string effective_config_json(const ScenarioConfig& cfg) {
  json root;
  root["name"] = cfg.name;
  json topo;
  topo["olt_count"] = cfg.topology.olt_count;
  topo["vms_per_olt"] = cfg.topology.vms_per_olt;
  topo["ont_count"] = cfg.topology.ont_count;
  topo["cloud"] = compute_json(cfg.topology.cloud);
  topo["olt"] = compute_json(cfg.topology.olt);
  topo["vm"] = compute_json(cfg.topology.vm);
  topo["ont"] = compute_json(cfg.topology.ont);
  topo["links"] = json{{"device_ont", link_json(cfg.topology.device_ont)},
                       {"ont_olt", link_json(cfg.topology.ont_olt)},
                       {"olt_cloud", link_json(cfg.topology.olt_cloud)},
                       {"olt_vm", link_json(cfg.topology.olt_vm)},
                       {"hypervisor", link_json(cfg.topology.hypervisor)},
                       {"broker", link_json(cfg.topology.broker)}};
  root["topology"] = topo;

  json apps = json::array();
  for (const auto& app : cfg.applications) {
    json a;
    a["name"] = app.name;
    a["user_count"] = app.user_count;
    a["task_rate_per_min"] = app.task_rate_per_min;
    a["max_latency_s"] = app.max_latency_s;
    a["task_length_mi"] = app.task_length_mi;
    a["request_kb"] = app.request_kb;
    a["response_kb"] = app.response_kb;
    a["pattern"] = json{{"kind", to_string(app.pattern.kind)},
                        {"burst_size", app.pattern.burst_size},
                        {"burst_interval_s", app.pattern.burst_interval_s}};
    a["container"] = json{{"ram_mb", app.container.ram_mb},
                          {"storage_mb", app.container.storage_mb},
                          {"image_size_mb", app.container.image_size_mb},
                          {"shared", app.container.shared},
                          {"replica_count", app.container.replica_count}};
    apps.push_back(a);
  }
  root["applications"] = apps;

  if (!cfg.profiles.empty()) {
    json ps = json::array();
    for (const auto& p : cfg.profiles) {
      ps.push_back(json{{"device_index", p.device},
                        {"app", cfg.applications.at(p.app_index).name},
                        {"start_time_s", p.start_time_s},
                        {"active_duration_s", p.active_duration_s},
                        {"idle_duration_s", p.idle_duration_s}});
    }
    root["profiles"] = ps;
  }

  root["workload"] =
      json{{"stagger_starts", cfg.workload.stagger_starts},
           {"active_duration_s", cfg.workload.active_duration_s},
           {"idle_duration_s", cfg.workload.idle_duration_s}};
  root["policy"] =
      json{{"placement", cfg.policy.placement_string()},
           {"offloading", cfg.policy.offloading_string()},
           {"trade_off_weights", kind_weights_json(cfg.policy.trade_off_weights)},
           {"multi_objective_weights",
            kind_weights_json(cfg.policy.multi_objective_weights)},
           {"mo_weights", json{{"w_ram", cfg.policy.mo_weights.w_ram},
                               {"w_storage", cfg.policy.mo_weights.w_storage},
                               {"w_cores", cfg.policy.mo_weights.w_cores},
                               {"w_mips", cfg.policy.mo_weights.w_mips}}},
           {"broker_lookup_latency_s", cfg.policy.broker_lookup_latency_s},
           {"control_message_kb", cfg.policy.control_message_kb}};
  root["deployment_model"] = to_string(cfg.deployment_model);
  root["duration_s"] = cfg.duration_s;
  root["seed"] = cfg.seed;
  root["replication_count"] = cfg.replication_count;
  root["queue_cap"] = cfg.queue_cap;
  return root.dump(2) + "\n";
}

std::vector<ApplicationSpec> baseline_applications(double user_scale) {
  struct Row {
    const char* name;
    int users;
    double rate, slo, length, req, resp;
    PatternKind pattern;
  };
  // Smart city / e-health / smart building / sports streaming / video gaming.
  static const Row rows[] = {
      {"smart_city", 128, 2.0, 0.5, 500.0, 1.0, 10.0, PatternKind::Periodic},
      {"e_health", 10, 60.0, 0.05, 1000.0, 10.0, 10.0, PatternKind::Periodic},
      {"smart_building", 20, 60.0, 0.2, 5000.0, 750.0, 500.0,
       PatternKind::Periodic},
      {"sports_streaming", 60, 20.0, 0.5, 5000.0, 750.0, 500.0,
       PatternKind::Bursty},
      {"video_gaming", 80, 180.0, 0.05, 100.0, 10.0, 10.0,
       PatternKind::Random},
  };
  std::vector<ApplicationSpec> apps;
  for (const Row& r : rows) {
    ApplicationSpec app;
    app.name = r.name;
    app.user_count =
        std::max(1, static_cast<int>(std::lround(r.users * user_scale)));
    app.task_rate_per_min = r.rate;
    app.max_latency_s = r.slo;
    app.task_length_mi = r.length;
    app.request_kb = r.req;
    app.response_kb = r.resp;
    app.pattern.kind = r.pattern;
    // Sports streaming: bursts of 5 every 15 s preserve the 20/min mean rate.
    app.pattern.burst_size = 5;
    app.pattern.burst_interval_s = 60.0 * app.pattern.burst_size / r.rate;
    app.container.app_id = app.name;
    app.container.replica_count = std::max(
        1, static_cast<int>(
               std::ceil(app.user_count * app.task_rate_per_min / 60.0)));
    apps.push_back(std::move(app));
  }
  return apps;
}

bool is_preset_name(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), ::tolower);
  return n == "s1" || n == "s2" || n == "s3" || n == "s4" || n == "s5" ||
         n == "mixed";
}

ScenarioConfig build_preset(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), ::tolower);
  if (!is_preset_name(n)) throw ConfigError("unknown preset: " + name);

  ScenarioConfig cfg;
  cfg.name = n;
  auto apps = baseline_applications();
  if (n == "mixed") {
    cfg.applications = std::move(apps);
    cfg.topology.olt_count = 3;
    cfg.topology.vms_per_olt = 7;
    cfg.topology.olt.cores = 14;
    cfg.topology.olt.mips_per_core = 95000.0;
    cfg.topology.vm.cores = 2;
    cfg.topology.vm.mips_per_core = 95000.0;
  } else {
    int idx = n[1] - '1';
    cfg.applications = {apps[idx]};
    cfg.topology.olt_count = 1;
    cfg.topology.vms_per_olt = 4;
    cfg.topology.olt.cores = 8;
    cfg.topology.olt.mips_per_core = 95000.0;
    cfg.topology.vm.cores = 2;
    cfg.topology.vm.mips_per_core = 95000.0;
  }
  cfg.topology.ont_count = cfg.total_users();
  return cfg;
}

}  // namespace ponsim
