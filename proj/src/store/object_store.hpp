#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "util/canon.hpp"
#include "util/fsutil.hpp"
#include "util/sha256.hpp"

namespace expd::store {

struct ObjectRef {
  std::string zone;
  std::string bucket;
  std::string key;
  Digest digest;
  uint64_t size = 0;
};

struct TransferReport {
  std::vector<std::string> transferred;
  std::vector<std::string> skipped;
  uint64_t bytes = 0;
};

struct TransferCounters {
  uint64_t bytes = 0;
  uint64_t objects = 0;
};

json to_json(const TransferReport& r);

// Multi-zone bucket/key object storage over local directory roots. Zones are
// subdirectories of one store root; every cross-zone copy is accounted in a
// ledger shared by bucket replication and snapshot replication.
//
// On-disk layout:
//   <root>/<zone>/<bucket>/objects/<percent-encoded-key>
//   <root>/_transfers.json
class ObjectStore {
 public:
  explicit ObjectStore(fs::path root);

  const fs::path& root() const { return root_; }
  fs::path zone_root(const std::string& zone) const;
  std::vector<std::string> zones() const;

  ObjectRef put_object(const std::string& zone, const std::string& bucket,
                       const std::string& key, std::string_view bytes);
  std::string get_object(const std::string& zone, const std::string& bucket,
                         const std::string& key) const;
  bool object_exists(const std::string& zone, const std::string& bucket,
                     const std::string& key) const;
  void delete_object(const std::string& zone, const std::string& bucket,
                     const std::string& key);
  // Keys with the given prefix, lexicographically sorted. Absent bucket
  // yields an empty list.
  std::vector<std::string> list_prefix(const std::string& zone,
                                       const std::string& bucket,
                                       const std::string& prefix) const;

  // Copies the named keys from one zone to another. Keys already present
  // with an identical digest are skipped; the ledger grows by exactly the
  // copied byte count. All keys must exist at the source or nothing is
  // touched.
  TransferReport replicate(const std::string& from_zone,
                           const std::string& to_zone,
                           const std::string& bucket,
                           const std::vector<std::string>& keys);

  TransferCounters transfer_counters(const std::string& from_zone,
                                     const std::string& to_zone) const;
  // Also used by snapshot replication so that all cross-zone traffic lands in
  // one ledger. Counters only ever grow.
  void record_transfer(const std::string& from_zone, const std::string& to_zone,
                       uint64_t bytes, uint64_t objects);

  static void check_zone_name(const std::string& zone);
  static void check_bucket_name(const std::string& bucket);
  static void check_key(const std::string& key);

 private:
  fs::path object_path(const std::string& zone, const std::string& bucket,
                       const std::string& key) const;

  fs::path root_;
  mutable std::mutex ledger_mu_;
};

}  // namespace expd::store
