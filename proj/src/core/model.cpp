#include "core/model.hpp"

#include <algorithm>
#include <set>

#include "util/err.hpp"

namespace expd::core {

bool is_valid_env_name(const std::string& name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!head(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) {
    return head(c) || (c >= '0' && c <= '9');
  });
}

bool is_clean_relative_path(const std::string& path) {
  if (path.empty()) return false;
  size_t start = 0;
  while (start <= path.size()) {
    size_t slash = path.find('/', start);
    size_t end = slash == std::string::npos ? path.size() : slash;
    std::string_view seg(path.data() + start, end - start);
    if (seg.empty() || seg == "." || seg == "..") return false;
    if (slash == std::string::npos) break;
    start = slash + 1;
    if (start == path.size()) return false;  // trailing slash
  }
  return true;
}

ValidatedRunConfig validate_run_config(RunConfig cfg) {
  if (cfg.command.empty()) fail(Errc::empty_command, "command is empty");

  std::set<std::string> names;
  for (const auto& [name, value] : cfg.env) {
    (void)value;
    if (!is_valid_env_name(name)) {
      fail(Errc::invalid_env_name, "invalid environment name: " + name);
    }
    if (!names.insert(name).second) {
      fail(Errc::duplicate_env_name, "duplicate environment name: " + name);
    }
  }

  std::set<std::string> targets;
  for (const auto& m : cfg.mounts) {
    if (m.bucket.empty()) fail(Errc::invalid_mount, "mount bucket is empty");
    if (!is_clean_relative_path(m.target)) {
      fail(Errc::mount_target_conflict,
           "mount target must be a clean relative path: " + m.target);
    }
    if (!targets.insert(m.target).second) {
      fail(Errc::mount_target_conflict, "duplicate mount target: " + m.target);
    }
  }

  const auto& hw = cfg.hardware;
  if (hw.accel_count > 0 && !hw.accel_type.has_value()) {
    fail(Errc::missing_accel_type,
         "accel_count > 0 requires an accelerator type");
  }
  if (hw.cpu_cores == 0 || hw.memory_mb == 0) {
    fail(Errc::invalid_hardware, "cpu_cores and memory_mb must be positive");
  }

  return ValidatedRunConfig(std::move(cfg));
}

bool satisfies(const HardwareOffer& offer, const HardwareSpec& spec) {
  if (offer.accel_count < spec.accel_count) return false;
  if (offer.cpu_cores < spec.cpu_cores) return false;
  if (offer.memory_mb < spec.memory_mb) return false;
  if (spec.accel_count > 0 &&
      (!offer.accel_type.has_value() || !spec.accel_type.has_value() ||
       *offer.accel_type != *spec.accel_type)) {
    return false;
  }
  return true;
}

json to_json(const HardwareSpec& s) {
  return json{{"accel_count", s.accel_count},
              {"accel_type", s.accel_type ? json(*s.accel_type) : json()},
              {"cpu_cores", s.cpu_cores},
              {"memory_mb", s.memory_mb}};
}

json to_json(const HardwareOffer& o) {
  return json{{"accel_count", o.accel_count},
              {"accel_type", o.accel_type ? json(*o.accel_type) : json()},
              {"cpu_cores", o.cpu_cores},
              {"executor_id", o.executor_id},
              {"memory_mb", o.memory_mb},
              {"zone", o.zone}};
}

json to_json(const MountSpec& m) {
  return json{{"bucket", m.bucket},
              {"prefix", m.prefix},
              {"read_only", m.read_only},
              {"target", m.target}};
}

json to_json(const RunConfig& c) {
  json env = json::object();
  for (const auto& [k, v] : c.env) env[k] = v;
  json mounts = json::array();
  for (const auto& m : c.mounts) mounts.push_back(to_json(m));
  return json{{"command", c.command},
              {"env", env},
              {"hardware", to_json(c.hardware)},
              {"mounts", mounts},
              {"setup_command",
               c.setup_command ? json(*c.setup_command) : json()},
              {"workdir_snapshot", c.workdir_snapshot}};
}

HardwareSpec hardware_spec_from_json(const json& j) {
  HardwareSpec s;
  s.accel_count = j.at("accel_count").get<uint32_t>();
  if (!j.at("accel_type").is_null()) {
    s.accel_type = j.at("accel_type").get<std::string>();
  }
  s.cpu_cores = j.at("cpu_cores").get<uint32_t>();
  s.memory_mb = j.at("memory_mb").get<uint64_t>();
  return s;
}

HardwareOffer hardware_offer_from_json(const json& j) {
  HardwareOffer o;
  o.accel_count = j.at("accel_count").get<uint32_t>();
  if (!j.at("accel_type").is_null()) {
    o.accel_type = j.at("accel_type").get<std::string>();
  }
  o.cpu_cores = j.at("cpu_cores").get<uint32_t>();
  o.executor_id = j.at("executor_id").get<std::string>();
  o.memory_mb = j.at("memory_mb").get<uint64_t>();
  o.zone = j.at("zone").get<std::string>();
  return o;
}

MountSpec mount_spec_from_json(const json& j) {
  MountSpec m;
  m.bucket = j.at("bucket").get<std::string>();
  m.prefix = j.at("prefix").get<std::string>();
  m.read_only = j.at("read_only").get<bool>();
  m.target = j.at("target").get<std::string>();
  return m;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::vector<std::string>>();
  for (auto it = j.at("env").begin(); it != j.at("env").end(); ++it) {
    c.env.emplace_back(it.key(), it.value().get<std::string>());
  }
  c.hardware = hardware_spec_from_json(j.at("hardware"));
  for (const auto& m : j.at("mounts")) c.mounts.push_back(mount_spec_from_json(m));
  if (!j.at("setup_command").is_null()) {
    c.setup_command = j.at("setup_command").get<std::vector<std::string>>();
  }
  c.workdir_snapshot = j.at("workdir_snapshot").get<std::string>();
  return c;
}

}  // namespace expd::core
