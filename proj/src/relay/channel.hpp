#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "util/canon.hpp"

namespace expd::relay {

enum class Direction { client_to_task, task_to_client };
enum class Side { client, task };
enum class ChannelKind { debug, terminal };

// The direction a side receives on.
inline Direction toward(Side receiver) {
  return receiver == Side::task ? Direction::client_to_task
                                : Direction::task_to_client;
}
inline Side sender_of(Direction d) {
  return d == Direction::client_to_task ? Side::client : Side::task;
}
inline Side receiver_of(Direction d) {
  return d == Direction::client_to_task ? Side::task : Side::client;
}

const char* kind_name(ChannelKind k);
std::optional<ChannelKind> kind_from_name(std::string_view name);
const char* side_name(Side s);
std::optional<Side> side_from_name(std::string_view name);

struct RelayFrame {
  std::string channel_id;
  Direction direction;
  uint64_t seq = 0;  // per direction, starting at 1, contiguous
  std::string payload;
};

struct ChannelConfig {
  size_t max_frames = 1024;              // per direction
  size_t max_bytes = 16 * 1024 * 1024;   // per direction
  size_t max_payload = 1024 * 1024;
};

// Returns false when the receiving connection is gone; the side is then
// treated as detached.
using FrameSink = std::function<bool(const RelayFrame&)>;
// Channel status notifications: {"event":"closed"|"failed"|"peer_attached"|
// "peer_detached"|"detached", "reason":...}.
using EventSink = std::function<void(const std::string& channel_id,
                                     const json& event)>;

struct ChannelInfo {
  std::string channel_id;
  std::string task_id;
  ChannelKind kind = ChannelKind::debug;
  bool client_attached = false;
  bool task_attached = false;
  uint64_t dropped_to_task = 0;
  uint64_t dropped_to_client = 0;
  uint64_t buffered_to_task = 0;
  uint64_t buffered_to_client = 0;
};

// Ordered, buffered, resumable byte-frame channels between a local client
// and a task. DEBUG channels are lossless: frames are retained until the
// receiver acknowledges them, and a re-attach with a resume cursor replays
// everything past it exactly once. TERMINAL channels deliver live only and
// count drops while the receiver is away. Overflowing a DEBUG buffer fails
// the whole channel rather than dropping silently.
class ChannelRegistry {
 public:
  explicit ChannelRegistry(ChannelConfig cfg = {}) : cfg_(cfg) {}

  // At most one channel per (task, kind); throws ChannelExists.
  std::string open(const std::string& task_id, ChannelKind kind);

  // Assigns the next seq and delivers or buffers the frame. Throws
  // UnknownChannel, ChannelFailed, PayloadTooLarge, NotAttached and
  // BufferOverflow (which fails the channel first).
  uint64_t send(const std::string& channel_id, Direction dir,
                std::string payload);

  // Marks the side attached, replays buffered frames past `resume_from`
  // (DEBUG), then delivers live. A second attach of the same side forcibly
  // detaches the previous connection. Returns the number of replayed frames.
  uint64_t attach(const std::string& channel_id, Side side,
                  uint64_t resume_from, FrameSink sink, EventSink events);

  void detach(const std::string& channel_id, Side side);

  // Confirms delivery up to seq for the direction this side receives;
  // acknowledged frames become reclaimable. Throws InvalidAck on regression
  // or overshoot.
  void ack(const std::string& channel_id, Side side, uint64_t seq);

  void close(const std::string& channel_id, const std::string& reason);
  void close_for_task(const std::string& task_id, const std::string& reason);

  std::optional<std::string> find(const std::string& task_id,
                                  ChannelKind kind) const;
  std::optional<ChannelInfo> info(const std::string& channel_id) const;

 private:
  struct DirState {
    uint64_t next_seq = 0;   // last assigned
    uint64_t acked = 0;      // receiver cursor
    uint64_t delivered = 0;  // highest handed to the current sink
    uint64_t dropped = 0;    // TERMINAL only
    size_t buffered_bytes = 0;
    std::deque<RelayFrame> buffer;  // DEBUG: frames with seq > acked
  };
  struct SideState {
    bool attached = false;
    FrameSink sink;
    EventSink events;
  };
  struct Session {
    std::mutex mu;
    std::string id;
    std::string task_id;
    ChannelKind kind = ChannelKind::debug;
    bool failed = false;
    bool closed = false;
    SideState sides[2];  // indexed by Side
    DirState dirs[2];    // indexed by Direction
  };

  std::shared_ptr<Session> find_session(const std::string& channel_id) const;
  void deliver_locked(Session& s, Direction dir, const RelayFrame& frame);
  static void emit(Session& s, Side to, const json& event);

  ChannelConfig cfg_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace expd::relay
