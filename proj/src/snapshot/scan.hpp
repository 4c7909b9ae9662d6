#pragma once

#include <filesystem>
#include <vector>

#include "snapshot/ignore.hpp"
#include "snapshot/manifest.hpp"

namespace expd::snap {

// Deterministic listing of all regular files and symlinks under `dir`,
// sorted by path bytes. Ignored subtrees are pruned; sockets, FIFOs and
// devices that are not ignored raise UnsupportedFileType. Empty directories
// are not captured.
std::vector<FileEntry> scan_workspace(const std::filesystem::path& dir,
                                      const IgnoreRules& rules);

}  // namespace expd::snap
