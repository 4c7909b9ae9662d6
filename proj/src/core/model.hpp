#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "util/canon.hpp"

namespace expd::core {

// What a task requires from an executor.
struct HardwareSpec {
  std::optional<std::string> accel_type;
  uint32_t accel_count = 0;
  uint32_t cpu_cores = 1;
  uint64_t memory_mb = 256;
};

// What an executor brings to the table.
struct HardwareOffer {
  std::string executor_id;
  std::optional<std::string> accel_type;
  uint32_t accel_count = 0;
  uint32_t cpu_cores = 1;
  uint64_t memory_mb = 256;
  std::string zone;
};

struct MountSpec {
  std::string bucket;
  std::string prefix;
  std::string target;  // relative path inside the task workspace
  bool read_only = true;
};

// Everything needed to reproduce a run. `env` is an ordered list so that
// duplicate names coming from the input surface are still visible to
// validation; the canonical JSON form is a name-sorted object.
struct RunConfig {
  std::vector<std::string> command;
  std::string workdir_snapshot;  // snapshot id, 64 hex chars
  std::vector<std::pair<std::string, std::string>> env;
  std::optional<std::vector<std::string>> setup_command;
  std::vector<MountSpec> mounts;
  HardwareSpec hardware;
};

class ValidatedRunConfig {
 public:
  const RunConfig& get() const { return cfg_; }

 private:
  explicit ValidatedRunConfig(RunConfig cfg) : cfg_(std::move(cfg)) {}
  friend ValidatedRunConfig validate_run_config(RunConfig cfg);
  RunConfig cfg_;
};

// Throws EmptyCommand, DuplicateEnvName, InvalidEnvName, MountTargetConflict,
// MissingAccelType, InvalidHardware or InvalidMount.
ValidatedRunConfig validate_run_config(RunConfig cfg);

// Componentwise sufficiency; accelerator type must match exactly when the
// spec asks for accelerators at all.
bool satisfies(const HardwareOffer& offer, const HardwareSpec& spec);

// A relative '/'-separated path with no empty, '.' or '..' segments.
bool is_clean_relative_path(const std::string& path);

bool is_valid_env_name(const std::string& name);

json to_json(const HardwareSpec& s);
json to_json(const HardwareOffer& o);
json to_json(const MountSpec& m);
json to_json(const RunConfig& c);

HardwareSpec hardware_spec_from_json(const json& j);
HardwareOffer hardware_offer_from_json(const json& j);
MountSpec mount_spec_from_json(const json& j);
RunConfig run_config_from_json(const json& j);

}  // namespace expd::core
