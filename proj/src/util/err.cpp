#include "util/err.hpp"

#include <array>
#include <utility>

namespace expd {

namespace {

constexpr std::pair<Errc, const char*> kNames[] = {
    {Errc::ok, "Ok"},
    {Errc::empty_command, "EmptyCommand"},
    {Errc::duplicate_env_name, "DuplicateEnvName"},
    {Errc::invalid_env_name, "InvalidEnvName"},
    {Errc::mount_target_conflict, "MountTargetConflict"},
    {Errc::missing_accel_type, "MissingAccelType"},
    {Errc::invalid_hardware, "InvalidHardware"},
    {Errc::invalid_mount, "InvalidMount"},
    {Errc::illegal_transition, "IllegalTransition"},
    {Errc::unknown_task, "UnknownTask"},
    {Errc::already_terminal, "AlreadyTerminal"},
    {Errc::wrong_executor, "WrongExecutor"},
    {Errc::unknown_executor, "UnknownExecutor"},
    {Errc::invalid_key, "InvalidKey"},
    {Errc::storage_failure, "StorageFailure"},
    {Errc::not_found, "NotFound"},
    {Errc::snapshot_not_found, "SnapshotNotFound"},
    {Errc::parent_not_found, "ParentNotFound"},
    {Errc::missing_blob, "MissingBlob"},
    {Errc::destination_not_empty, "DestinationNotEmpty"},
    {Errc::duplicate_path, "DuplicatePath"},
    {Errc::not_a_directory, "NotADirectory"},
    {Errc::unsupported_file_type, "UnsupportedFileType"},
    {Errc::task_terminal, "TaskTerminal"},
    {Errc::channel_exists, "ChannelExists"},
    {Errc::unknown_channel, "UnknownChannel"},
    {Errc::buffer_overflow, "BufferOverflow"},
    {Errc::payload_too_large, "PayloadTooLarge"},
    {Errc::not_attached, "NotAttached"},
    {Errc::invalid_ack, "InvalidAck"},
    {Errc::channel_failed, "ChannelFailed"},
    {Errc::frame_too_large, "FrameTooLarge"},
    {Errc::truncated_stream, "TruncatedStream"},
    {Errc::protocol_error, "ProtocolError"},
    {Errc::corrupt_state, "CorruptState"},
    {Errc::spawn_failure, "SpawnFailure"},
    {Errc::setup_failed, "SetupFailed"},
    {Errc::coordinator_unreachable, "CoordinatorUnreachable"},
    {Errc::port_in_use, "PortInUse"},
    {Errc::io_error, "IoError"},
};

}  // namespace

const char* errc_name(Errc c) {
  for (const auto& [code, name] : kNames) {
    if (code == c) return name;
  }
  return "ProtocolError";
}

Errc errc_from_name(std::string_view name) {
  for (const auto& [code, n] : kNames) {
    if (name == n) return code;
  }
  return Errc::protocol_error;
}

}  // namespace expd
