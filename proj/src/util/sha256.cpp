#include "util/sha256.hpp"

#include <openssl/evp.h>

#include "util/bytes.hpp"
#include "util/err.hpp"

namespace expd {

std::string Digest::hex() const { return to_hex(bytes.data(), bytes.size()); }

bool Digest::parse(std::string_view hex64, Digest& out) {
  if (hex64.size() != 64) return false;
  std::string raw;
  if (!from_hex(hex64, raw)) return false;
  for (size_t i = 0; i < 32; ++i) out.bytes[i] = static_cast<uint8_t>(raw[i]);
  return true;
}

Sha256::Sha256() {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    fail(Errc::storage_failure, "sha256 init failed");
  }
  ctx_ = ctx;
}

Sha256::~Sha256() {
  if (ctx_ != nullptr) EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

void Sha256::update(std::string_view data) { update(data.data(), data.size()); }

void Sha256::update(const void* data, size_t len) {
  if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data, len) != 1) {
    fail(Errc::storage_failure, "sha256 update failed");
  }
}

Digest Sha256::finish() {
  Digest d;
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), d.bytes.data(),
                         &len) != 1 ||
      len != d.bytes.size()) {
    fail(Errc::storage_failure, "sha256 final failed");
  }
  return d;
}

Digest sha256(std::string_view data) {
  Sha256 h;
  h.update(data);
  return h.finish();
}

}  // namespace expd
