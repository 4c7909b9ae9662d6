#include "wire/frame.hpp"

#include "util/bytes.hpp"
#include "util/err.hpp"

namespace expd::wire {

std::string encode_frame(uint8_t msg_type, std::string_view body) {
  if (body.size() > kMaxPayload) {
    fail(Errc::payload_too_large,
         "frame body of " + std::to_string(body.size()) + " bytes exceeds cap");
  }
  std::string out;
  out.reserve(4 + 1 + body.size());
  put_u32_be(out, static_cast<uint32_t>(body.size() + 1));
  out.push_back(static_cast<char>(msg_type));
  out.append(body);
  return out;
}

std::optional<Decoded> decode_frame(std::string_view buf) {
  if (buf.size() < 4) return std::nullopt;
  uint32_t length = get_u32_be(reinterpret_cast<const uint8_t*>(buf.data()));
  if (length < 1) fail(Errc::protocol_error, "frame length field is zero");
  if (length > kMaxFrameLength) {
    fail(Errc::frame_too_large,
         "declared frame length " + std::to_string(length) + " exceeds cap");
  }
  if (buf.size() < 4 + static_cast<size_t>(length)) return std::nullopt;
  Decoded d;
  d.msg_type = static_cast<uint8_t>(buf[4]);
  d.body.assign(buf.data() + 5, length - 1);
  d.consumed = 4 + length;
  return d;
}

}  // namespace expd::wire
