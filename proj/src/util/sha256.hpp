#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace expd {

// SHA-256 digest rendered as 64 lowercase hex characters.
struct Digest {
  std::array<uint8_t, 32> bytes{};

  std::string hex() const;
  static bool parse(std::string_view hex64, Digest& out);

  auto operator<=>(const Digest&) const = default;
};

class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view data);
  void update(const void* data, size_t len);
  Digest finish();

 private:
  void* ctx_;
};

Digest sha256(std::string_view data);

}  // namespace expd
