#include "snapshot/manifest.hpp"

#include <algorithm>

#include "core/model.hpp"
#include "util/err.hpp"

namespace expd::snap {

SnapshotManifest build_manifest(std::vector<FileEntry> listing,
                                std::optional<std::string> parent,
                                int64_t created_at) {
  std::sort(listing.begin(), listing.end(),
            [](const FileEntry& a, const FileEntry& b) { return a.path < b.path; });
  for (size_t i = 0; i < listing.size(); ++i) {
    if (!core::is_clean_relative_path(listing[i].path)) {
      fail(Errc::duplicate_path, "invalid entry path: " + listing[i].path);
    }
    if (i > 0 && listing[i].path == listing[i - 1].path) {
      fail(Errc::duplicate_path, "duplicate entry path: " + listing[i].path);
    }
  }
  SnapshotManifest m;
  m.entries = std::move(listing);
  m.parent = std::move(parent);
  m.created_at = created_at;
  return m;
}

DeltaSet diff_manifests(const SnapshotManifest& parent,
                        const SnapshotManifest& child) {
  DeltaSet d;
  size_t i = 0, j = 0;
  auto differs = [](const FileEntry& a, const FileEntry& b) {
    if (a.kind != b.kind) return true;
    if (a.kind == FileKind::file) {
      return a.digest != b.digest || a.executable != b.executable;
    }
    return a.link_target != b.link_target;
  };
  while (i < parent.entries.size() || j < child.entries.size()) {
    if (i == parent.entries.size()) {
      d.added.push_back(child.entries[j++].path);
    } else if (j == child.entries.size()) {
      d.removed.push_back(parent.entries[i++].path);
    } else if (parent.entries[i].path < child.entries[j].path) {
      d.removed.push_back(parent.entries[i++].path);
    } else if (child.entries[j].path < parent.entries[i].path) {
      d.added.push_back(child.entries[j++].path);
    } else {
      if (differs(parent.entries[i], child.entries[j])) {
        d.modified.push_back(child.entries[j].path);
      }
      ++i;
      ++j;
    }
  }
  return d;
}

json to_json(const FileEntry& e) {
  if (e.kind == FileKind::file) {
    return json{{"digest", e.digest.hex()},
                {"executable", e.executable},
                {"kind", "FILE"},
                {"path", e.path},
                {"size", e.size}};
  }
  return json{{"kind", "SYMLINK"},
              {"link_target", e.link_target},
              {"path", e.path}};
}

FileEntry file_entry_from_json(const json& j) {
  FileEntry e;
  e.path = j.at("path").get<std::string>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "FILE") {
    e.kind = FileKind::file;
    if (!Digest::parse(j.at("digest").get<std::string>(), e.digest)) {
      fail(Errc::corrupt_state, "bad digest in manifest entry " + e.path);
    }
    e.size = j.at("size").get<uint64_t>();
    e.executable = j.at("executable").get<bool>();
  } else if (kind == "SYMLINK") {
    e.kind = FileKind::symlink;
    e.link_target = j.at("link_target").get<std::string>();
  } else {
    fail(Errc::corrupt_state, "unknown entry kind: " + kind);
  }
  return e;
}

json manifest_to_json(const SnapshotManifest& m, bool include_created_at) {
  json entries = json::array();
  for (const auto& e : m.entries) entries.push_back(to_json(e));
  json j{{"entries", std::move(entries)},
         {"parent", m.parent ? json(*m.parent) : json()}};
  if (include_created_at) j["created_at"] = m.created_at;
  return j;
}

SnapshotManifest manifest_from_json(const json& j) {
  SnapshotManifest m;
  for (const auto& e : j.at("entries")) {
    m.entries.push_back(file_entry_from_json(e));
  }
  if (!j.at("parent").is_null()) m.parent = j.at("parent").get<std::string>();
  m.created_at = j.value("created_at", int64_t{0});
  return m;
}

std::string snapshot_id(const SnapshotManifest& m) {
  return sha256(canon_dump(manifest_to_json(m, /*include_created_at=*/false)))
      .hex();
}

}  // namespace expd::snap
