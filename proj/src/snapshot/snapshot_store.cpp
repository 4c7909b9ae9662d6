#include "snapshot/snapshot_store.hpp"

#include <map>
#include <set>

#include "snapshot/scan.hpp"
#include "util/err.hpp"
#include "util/filelock.hpp"

namespace expd::snap {

json to_json(const UploadReport& r) {
  return json{{"blob_bytes", r.blob_bytes},
              {"blobs_considered", r.blobs_considered},
              {"blobs_transferred", r.blobs_transferred},
              {"bytes_transferred", r.bytes_transferred()},
              {"files", r.files},
              {"manifest_bytes", r.manifest_bytes}};
}

json to_json(const SnapshotTransferReport& r) {
  return json{{"blobs_skipped", r.blobs_skipped},
              {"blobs_transferred", r.blobs_transferred},
              {"bytes", r.bytes},
              {"manifest_transferred", r.manifest_transferred}};
}

json to_json(const GcReport& r) {
  return json{{"blobs_deleted", r.blobs_deleted},
              {"manifests_deleted", r.manifests_deleted}};
}

fs::path SnapshotStore::blob_path(const std::string& zone,
                                  const Digest& digest) const {
  std::string hex = digest.hex();
  return objects_.zone_root(zone) / "_snapshots" / "blobs" / hex.substr(0, 2) /
         hex;
}

fs::path SnapshotStore::manifest_path(const std::string& zone,
                                      const std::string& snapshot_id) const {
  return objects_.zone_root(zone) / "_snapshots" / "manifests" /
         (snapshot_id + ".json");
}

fs::path SnapshotStore::gc_lock_path(const std::string& zone) const {
  return objects_.zone_root(zone) / "_snapshots" / ".gc.lock";
}

bool SnapshotStore::manifest_exists(const std::string& zone,
                                    const std::string& snapshot_id) const {
  return fs::exists(manifest_path(zone, snapshot_id));
}

SnapshotManifest SnapshotStore::load_manifest(
    const std::string& zone, const std::string& snapshot_id) const {
  fs::path p = manifest_path(zone, snapshot_id);
  if (!fs::exists(p)) {
    fail(Errc::snapshot_not_found,
         "snapshot " + snapshot_id + " not in zone " + zone);
  }
  return manifest_from_json(json::parse(read_file(p)));
}

std::vector<std::string> SnapshotStore::list_manifests(
    const std::string& zone) const {
  std::vector<std::string> ids;
  fs::path dir = objects_.zone_root(zone) / "_snapshots" / "manifests";
  std::error_code ec;
  for (const auto& ent : fs::directory_iterator(dir, ec)) {
    std::string name = ent.path().filename().string();
    if (name.size() == 64 + 5 && name.ends_with(".json")) {
      ids.push_back(name.substr(0, 64));
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool SnapshotStore::blob_exists(const std::string& zone,
                                const Digest& digest) const {
  return fs::exists(blob_path(zone, digest));
}

std::pair<std::string, UploadReport> SnapshotStore::upload(
    const fs::path& workspace, const std::optional<std::string>& parent,
    const std::string& zone) {
  ensure_dir(objects_.zone_root(zone) / "_snapshots");
  FileLock gc_guard(gc_lock_path(zone), /*exclusive=*/false);

  if (parent && !manifest_exists(zone, *parent)) {
    fail(Errc::parent_not_found,
         "parent snapshot " + *parent + " not in zone " + zone);
  }

  auto listing = scan_workspace(workspace, IgnoreRules::load(workspace));
  SnapshotManifest manifest = build_manifest(std::move(listing), parent, now_ms());
  std::string id = snapshot_id(manifest);

  UploadReport report;
  report.files = manifest.entries.size();

  // First source path per distinct digest; a blob crosses the wire at most
  // once however many paths share its content.
  std::map<Digest, std::string> sources;
  for (const auto& e : manifest.entries) {
    if (e.kind == FileKind::file) sources.emplace(e.digest, e.path);
  }
  report.blobs_considered = sources.size();
  for (const auto& [digest, rel] : sources) {
    if (blob_exists(zone, digest)) continue;
    uint64_t n = copy_file_checked(workspace / rel, blob_path(zone, digest),
                                   digest);
    ++report.blobs_transferred;
    report.blob_bytes += n;
  }

  fs::path mp = manifest_path(zone, id);
  if (!fs::exists(mp)) {
    std::string body = canon_dump(manifest_to_json(manifest, true));
    write_file_atomic(mp, body);
    report.manifest_bytes = body.size();
  }
  return {id, report};
}

void SnapshotStore::materialize(const std::string& snapshot_id,
                                const fs::path& dest,
                                const std::string& zone) const {
  SnapshotManifest manifest = load_manifest(zone, snapshot_id);
  if (!dir_empty_or_absent(dest)) {
    fail(Errc::destination_not_empty, dest.string() + " is not empty");
  }
  ensure_dir(dest);
  for (const auto& e : manifest.entries) {
    fs::path target = dest / e.path;
    ensure_dir(target.parent_path());
    if (e.kind == FileKind::symlink) {
      fs::create_symlink(e.link_target, target);
      continue;
    }
    fs::path blob = blob_path(zone, e.digest);
    if (!fs::exists(blob)) {
      fail(Errc::missing_blob,
           "blob " + e.digest.hex() + " missing for " + e.path);
    }
    copy_file_checked(blob, target, e.digest);
    fs::permissions(target, e.executable
                                ? (fs::perms::owner_all | fs::perms::group_read |
                                   fs::perms::group_exec | fs::perms::others_read |
                                   fs::perms::others_exec)
                                : (fs::perms::owner_read | fs::perms::owner_write |
                                   fs::perms::group_read | fs::perms::others_read));
  }
}

SnapshotTransferReport SnapshotStore::replicate(const std::string& snapshot_id,
                                                const std::string& from_zone,
                                                const std::string& to_zone) {
  fs::path src_manifest = manifest_path(from_zone, snapshot_id);
  if (!fs::exists(src_manifest)) {
    fail(Errc::snapshot_not_found,
         "snapshot " + snapshot_id + " not in zone " + from_zone);
  }
  std::string manifest_bytes = read_file(src_manifest);
  SnapshotManifest manifest = manifest_from_json(json::parse(manifest_bytes));

  ensure_dir(objects_.zone_root(to_zone) / "_snapshots");
  FileLock gc_guard(gc_lock_path(to_zone), /*exclusive=*/false);

  SnapshotTransferReport report;
  uint64_t objects_moved = 0;

  std::set<Digest> digests;
  for (const auto& e : manifest.entries) {
    if (e.kind == FileKind::file) digests.insert(e.digest);
  }
  for (const auto& d : digests) {
    fs::path src = blob_path(from_zone, d);
    if (!fs::exists(src)) {
      fail(Errc::missing_blob, "blob " + d.hex() + " missing in " + from_zone);
    }
    if (blob_exists(to_zone, d)) {
      report.blobs_skipped.push_back(d.hex());
      continue;
    }
    uint64_t n = copy_file_checked(src, blob_path(to_zone, d), d);
    report.blobs_transferred.push_back(d.hex());
    report.bytes += n;
    ++objects_moved;
  }
  if (!manifest_exists(to_zone, snapshot_id)) {
    // Byte-identical copy so the id hashes the same everywhere.
    write_file_atomic(manifest_path(to_zone, snapshot_id), manifest_bytes);
    report.manifest_transferred = true;
    report.bytes += manifest_bytes.size();
    ++objects_moved;
  }
  if (objects_moved > 0) {
    objects_.record_transfer(from_zone, to_zone, report.bytes, objects_moved);
  }
  return report;
}

GcReport SnapshotStore::collect_garbage(
    const std::string& zone, const std::vector<std::string>& live_roots) {
  ensure_dir(objects_.zone_root(zone) / "_snapshots");
  FileLock gc_guard(gc_lock_path(zone), /*exclusive=*/true);

  std::set<std::string> live_manifests;
  std::set<std::string> live_blobs;
  std::vector<std::string> queue = live_roots;
  while (!queue.empty()) {
    std::string id = std::move(queue.back());
    queue.pop_back();
    if (live_manifests.contains(id) || !manifest_exists(zone, id)) continue;
    live_manifests.insert(id);
    SnapshotManifest m = load_manifest(zone, id);
    for (const auto& e : m.entries) {
      if (e.kind == FileKind::file) live_blobs.insert(e.digest.hex());
    }
    if (m.parent) queue.push_back(*m.parent);
  }

  GcReport report;
  for (const std::string& id : list_manifests(zone)) {
    if (live_manifests.contains(id)) continue;
    std::error_code ec;
    if (fs::remove(manifest_path(zone, id), ec)) ++report.manifests_deleted;
  }
  fs::path blobs_root = objects_.zone_root(zone) / "_snapshots" / "blobs";
  std::error_code ec;
  for (const auto& fan : fs::directory_iterator(blobs_root, ec)) {
    if (!fan.is_directory()) continue;
    for (const auto& ent : fs::directory_iterator(fan.path())) {
      std::string hex = ent.path().filename().string();
      if (live_blobs.contains(hex)) continue;
      std::error_code rec;
      if (fs::remove(ent.path(), rec)) ++report.blobs_deleted;
    }
    std::error_code dec;
    if (fs::is_empty(fan.path(), dec) && !dec) fs::remove(fan.path(), dec);
  }
  return report;
}

}  // namespace expd::snap
