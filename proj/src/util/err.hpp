#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expd {

// Error codes shared by the library, the wire protocol and the C API.
enum class Errc {
  ok = 0,

  // run-config validation
  empty_command,
  duplicate_env_name,
  invalid_env_name,
  mount_target_conflict,
  missing_accel_type,
  invalid_hardware,
  invalid_mount,

  // task lifecycle / scheduler
  illegal_transition,
  unknown_task,
  already_terminal,
  wrong_executor,
  unknown_executor,

  // object / snapshot stores
  invalid_key,
  storage_failure,
  not_found,
  snapshot_not_found,
  parent_not_found,
  missing_blob,
  destination_not_empty,
  duplicate_path,
  not_a_directory,
  unsupported_file_type,

  // channel relay
  task_terminal,
  channel_exists,
  unknown_channel,
  buffer_overflow,
  payload_too_large,
  not_attached,
  invalid_ack,
  channel_failed,

  // wire protocol / persistence
  frame_too_large,
  truncated_stream,
  protocol_error,
  corrupt_state,

  // executor agent
  spawn_failure,
  setup_failed,

  // client / daemon
  coordinator_unreachable,
  port_in_use,
  io_error,
};

const char* errc_name(Errc c);
Errc errc_from_name(std::string_view name);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace expd
