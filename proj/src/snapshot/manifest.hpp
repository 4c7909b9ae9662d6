#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "util/canon.hpp"
#include "util/sha256.hpp"

namespace expd::snap {

enum class FileKind { file, symlink };

struct FileEntry {
  std::string path;  // relative, '/'-separated, no '.'/'..' segments
  FileKind kind = FileKind::file;
  Digest digest;           // FILE only
  uint64_t size = 0;       // FILE only
  bool executable = false;  // FILE only
  std::string link_target;  // SYMLINK only
};

// Content-addressed listing of a workspace tree. The snapshot id is the
// SHA-256 of the manifest's canonical JSON with `created_at` excluded, so
// identical trees with identical parents share an id across time.
struct SnapshotManifest {
  std::vector<FileEntry> entries;  // sorted by path bytes
  std::optional<std::string> parent;
  int64_t created_at = 0;
};

struct DeltaSet {
  std::vector<std::string> added;
  std::vector<std::string> modified;
  std::vector<std::string> removed;
};

inline Digest hash_blob(std::string_view bytes) { return sha256(bytes); }

// Sorts the listing and validates paths; throws DuplicatePath.
SnapshotManifest build_manifest(std::vector<FileEntry> listing,
                                std::optional<std::string> parent,
                                int64_t created_at);

// added: paths only in child; removed: paths only in parent; modified: paths
// in both whose kind, digest, executable bit or link target differ.
DeltaSet diff_manifests(const SnapshotManifest& parent,
                        const SnapshotManifest& child);

std::string snapshot_id(const SnapshotManifest& m);

json to_json(const FileEntry& e);
FileEntry file_entry_from_json(const json& j);
json manifest_to_json(const SnapshotManifest& m, bool include_created_at);
SnapshotManifest manifest_from_json(const json& j);

}  // namespace expd::snap
