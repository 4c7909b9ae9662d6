#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace expd::wire {

// Frame layout, bit-exact: [length:4 bytes big-endian][msg_type:1][body].
// `length` counts the bytes after the length field, so length = 1 + body size.
constexpr size_t kMaxPayload = 1024 * 1024;        // 1 MiB body
constexpr size_t kMaxFrameLength = kMaxPayload + 1;  // + type byte

// Message type space. 0x01-0x1F are control messages whose body is a
// canonical UTF-8 JSON document; 0x20/0x21 carry raw channel payload bytes.
enum MsgType : uint8_t {
  kHello = 0x01,
  kOk = 0x02,
  kErr = 0x03,
  kSubmitTask = 0x04,
  kTaskStatus = 0x05,
  kRegisterExecutor = 0x06,
  kHeartbeat = 0x07,
  kClaimNext = 0x08,
  kReportStatus = 0x09,
  kLogChunk = 0x0A,
  kLogSubscribe = 0x0B,
  kLogData = 0x0C,
  kLogEnd = 0x0D,
  kChannelOpen = 0x0E,
  kChannelAttach = 0x0F,
  kChannelAck = 0x10,
  kChannelClose = 0x11,
  kChannelEvent = 0x12,
  kCancelTask = 0x13,
  kTaskDetail = 0x14,
  kGc = 0x15,
  kListExecutors = 0x16,
  kKillTask = 0x17,
  kChannelTaskAttach = 0x18,
  kChannelDetach = 0x19,
  kScratchGc = 0x1A,
  kReplicateSnapshot = 0x1B,
  kChannelPayloadToTask = 0x20,
  kChannelPayloadToClient = 0x21,
};

struct Decoded {
  uint8_t msg_type;
  std::string body;
  size_t consumed;
};

// Throws PayloadTooLarge when body exceeds the cap.
std::string encode_frame(uint8_t msg_type, std::string_view body);

// Returns nullopt (consuming nothing) when the buffer does not yet hold a
// complete frame. Throws FrameTooLarge for an over-cap declared length and
// ProtocolError for a zero length.
std::optional<Decoded> decode_frame(std::string_view buf);

}  // namespace expd::wire
