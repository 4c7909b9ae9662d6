#include "util/fsutil.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>

#include "util/bytes.hpp"
#include "util/err.hpp"

namespace expd {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(Errc::storage_failure, "cannot open " + p.string());
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) fail(Errc::storage_failure, "read failed for " + p.string());
  return data;
}

void write_file(const fs::path& p, std::string_view data) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::storage_failure, "cannot create " + p.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) fail(Errc::storage_failure, "write failed for " + p.string());
}

void write_file_atomic(const fs::path& p, std::string_view data,
                       bool fsync_file) {
  ensure_dir(p.parent_path());
  fs::path tmp = p.parent_path() / (".tmp-" + random_hex(8));
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
  if (fd < 0) fail(Errc::storage_failure, "cannot create " + tmp.string());
  size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      ::close(fd);
      ::unlink(tmp.c_str());
      fail(Errc::storage_failure, "write failed for " + tmp.string());
    }
    off += static_cast<size_t>(n);
  }
  if (fsync_file) ::fsync(fd);
  ::close(fd);
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(Errc::storage_failure, "rename failed for " + p.string());
  }
}

uint64_t copy_file_checked(const fs::path& src, const fs::path& dst,
                           const Digest& expected) {
  std::ifstream in(src, std::ios::binary);
  if (!in) fail(Errc::storage_failure, "cannot open " + src.string());
  ensure_dir(dst.parent_path());
  fs::path tmp = dst.parent_path() / (".tmp-" + random_hex(8));
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::storage_failure, "cannot create " + tmp.string());

  Sha256 h;
  uint64_t total = 0;
  char buf[64 * 1024];
  while (in) {
    in.read(buf, sizeof(buf));
    std::streamsize n = in.gcount();
    if (n <= 0) break;
    h.update(buf, static_cast<size_t>(n));
    out.write(buf, n);
    total += static_cast<uint64_t>(n);
  }
  out.flush();
  bool write_ok = static_cast<bool>(out);
  out.close();
  if (in.bad() || !write_ok) {
    std::error_code ec;
    fs::remove(tmp, ec);
    fail(Errc::storage_failure, "copy failed for " + src.string());
  }
  if (h.finish() != expected) {
    std::error_code ec;
    fs::remove(tmp, ec);
    fail(Errc::storage_failure,
         "content of " + src.string() + " changed while copying");
  }
  std::error_code ec;
  fs::rename(tmp, dst, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(Errc::storage_failure, "rename failed for " + dst.string());
  }
  return total;
}

Digest hash_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(Errc::storage_failure, "cannot open " + p.string());
  Sha256 h;
  char buf[64 * 1024];
  while (in) {
    in.read(buf, sizeof(buf));
    std::streamsize n = in.gcount();
    if (n <= 0) break;
    h.update(buf, static_cast<size_t>(n));
  }
  if (in.bad()) fail(Errc::storage_failure, "read failed for " + p.string());
  return h.finish();
}

void ensure_dir(const fs::path& p) {
  if (p.empty()) return;
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec && !fs::is_directory(p)) {
    fail(Errc::storage_failure, "cannot create directory " + p.string());
  }
}

bool dir_empty_or_absent(const fs::path& p) {
  std::error_code ec;
  if (!fs::exists(p, ec)) return true;
  if (!fs::is_directory(p, ec)) return false;
  return fs::directory_iterator(p, ec) == fs::directory_iterator();
}

std::string random_hex(size_t n_bytes) {
  static thread_local std::mt19937_64 rng(
      std::random_device{}() ^
      (static_cast<uint64_t>(::getpid()) << 32) ^
      std::chrono::steady_clock::now().time_since_epoch().count());
  std::string raw(n_bytes, '\0');
  for (auto& c : raw) c = static_cast<char>(rng() & 0xFF);
  return to_hex(raw);
}

int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace expd
