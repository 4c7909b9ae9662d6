#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snapshot/manifest.hpp"
#include "store/object_store.hpp"

namespace expd::snap {

struct UploadReport {
  uint64_t files = 0;
  uint64_t blobs_considered = 0;   // distinct digests in the tree
  uint64_t blobs_transferred = 0;  // blobs not already present
  uint64_t blob_bytes = 0;
  uint64_t manifest_bytes = 0;  // 0 when the manifest already existed
  uint64_t bytes_transferred() const { return blob_bytes + manifest_bytes; }
};

struct SnapshotTransferReport {
  std::vector<std::string> blobs_transferred;
  std::vector<std::string> blobs_skipped;
  bool manifest_transferred = false;
  uint64_t bytes = 0;
};

struct GcReport {
  uint64_t manifests_deleted = 0;
  uint64_t blobs_deleted = 0;
};

json to_json(const UploadReport& r);
json to_json(const SnapshotTransferReport& r);
json to_json(const GcReport& r);

// Content-addressed snapshots inside a zone of the object store:
//   <zone>/_snapshots/blobs/<hex[0:2]>/<hex>
//   <zone>/_snapshots/manifests/<snapshot-id>.json
// Blob writes are idempotent (same digest, same bytes), so concurrent uploads
// are safe; garbage collection takes the zone's advisory lock exclusively
// while uploads hold it shared.
class SnapshotStore {
 public:
  explicit SnapshotStore(store::ObjectStore& objects) : objects_(objects) {}

  // Scans the workspace (honouring `.jtignore`), builds the manifest with the
  // given parent, and uploads only blobs whose digests are not already in the
  // zone. Throws ParentNotFound when the parent manifest is absent.
  std::pair<std::string, UploadReport> upload(
      const fs::path& workspace, const std::optional<std::string>& parent,
      const std::string& zone);

  // Restores the exact tree into an empty or absent directory.
  void materialize(const std::string& snapshot_id, const fs::path& dest,
                   const std::string& zone) const;

  // Copies the manifest and any missing blobs; the ledger grows by exactly
  // the copied bytes.
  SnapshotTransferReport replicate(const std::string& snapshot_id,
                                   const std::string& from_zone,
                                   const std::string& to_zone);

  // Deletes every manifest and blob not reachable from the live roots via
  // parent chains and manifest entries.
  GcReport collect_garbage(const std::string& zone,
                           const std::vector<std::string>& live_roots);

  bool manifest_exists(const std::string& zone,
                       const std::string& snapshot_id) const;
  SnapshotManifest load_manifest(const std::string& zone,
                                 const std::string& snapshot_id) const;
  std::vector<std::string> list_manifests(const std::string& zone) const;
  bool blob_exists(const std::string& zone, const Digest& digest) const;

  fs::path blob_path(const std::string& zone, const Digest& digest) const;
  fs::path manifest_path(const std::string& zone,
                         const std::string& snapshot_id) const;

  store::ObjectStore& objects() { return objects_; }

 private:
  fs::path gc_lock_path(const std::string& zone) const;

  store::ObjectStore& objects_;
};

}  // namespace expd::snap
