#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "util/sha256.hpp"

namespace expd {

namespace fs = std::filesystem;

std::string read_file(const fs::path& p);
void write_file(const fs::path& p, std::string_view data);

// Write-temp-then-rename; readers of an existing file see old or new bytes,
// never a mix. Creates parent directories.
void write_file_atomic(const fs::path& p, std::string_view data,
                       bool fsync_file = false);

// Streaming copy that verifies the content hashes to `expected` while copying.
// Destination is written atomically. Returns bytes copied.
uint64_t copy_file_checked(const fs::path& src, const fs::path& dst,
                           const Digest& expected);

Digest hash_file(const fs::path& p);

void ensure_dir(const fs::path& p);
bool dir_empty_or_absent(const fs::path& p);

std::string random_hex(size_t n_bytes);

int64_t now_ms();

}  // namespace expd
