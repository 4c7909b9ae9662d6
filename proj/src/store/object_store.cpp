#include "store/object_store.hpp"

#include <algorithm>

#include "util/bytes.hpp"
#include "util/err.hpp"
#include "util/filelock.hpp"

namespace expd::store {

namespace {

bool clean_component(const std::string& s) {
  if (s.empty() || s[0] == '.' || s[0] == '_') return false;
  return s.find('/') == std::string::npos &&
         s.find('\0') == std::string::npos;
}

}  // namespace

json to_json(const TransferReport& r) {
  return json{{"bytes", r.bytes},
              {"skipped", r.skipped},
              {"transferred", r.transferred}};
}

ObjectStore::ObjectStore(fs::path root) : root_(std::move(root)) {
  ensure_dir(root_);
}

void ObjectStore::check_zone_name(const std::string& zone) {
  if (!clean_component(zone)) {
    fail(Errc::invalid_key, "invalid zone name: " + zone);
  }
}

void ObjectStore::check_bucket_name(const std::string& bucket) {
  if (!clean_component(bucket)) {
    fail(Errc::invalid_key, "invalid bucket name: " + bucket);
  }
}

void ObjectStore::check_key(const std::string& key) {
  if (key.empty() || key.find('\0') != std::string::npos) {
    fail(Errc::invalid_key, "object keys must be non-empty and NUL-free");
  }
}

fs::path ObjectStore::zone_root(const std::string& zone) const {
  check_zone_name(zone);
  return root_ / zone;
}

std::vector<std::string> ObjectStore::zones() const {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& ent : fs::directory_iterator(root_, ec)) {
    if (!ent.is_directory()) continue;
    std::string name = ent.path().filename().string();
    if (!name.empty() && name[0] != '_' && name[0] != '.') out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

fs::path ObjectStore::object_path(const std::string& zone,
                                  const std::string& bucket,
                                  const std::string& key) const {
  return root_ / zone / bucket / "objects" / percent_encode(key);
}

ObjectRef ObjectStore::put_object(const std::string& zone,
                                  const std::string& bucket,
                                  const std::string& key,
                                  std::string_view bytes) {
  check_zone_name(zone);
  check_bucket_name(bucket);
  check_key(key);
  write_file_atomic(object_path(zone, bucket, key), bytes);
  ObjectRef ref;
  ref.zone = zone;
  ref.bucket = bucket;
  ref.key = key;
  ref.digest = sha256(bytes);
  ref.size = bytes.size();
  return ref;
}

std::string ObjectStore::get_object(const std::string& zone,
                                    const std::string& bucket,
                                    const std::string& key) const {
  check_zone_name(zone);
  check_bucket_name(bucket);
  check_key(key);
  fs::path p = object_path(zone, bucket, key);
  if (!fs::exists(p)) {
    fail(Errc::not_found, "no object " + bucket + "/" + key + " in " + zone);
  }
  return read_file(p);
}

bool ObjectStore::object_exists(const std::string& zone,
                                const std::string& bucket,
                                const std::string& key) const {
  return fs::exists(object_path(zone, bucket, key));
}

void ObjectStore::delete_object(const std::string& zone,
                                const std::string& bucket,
                                const std::string& key) {
  fs::path p = object_path(zone, bucket, key);
  std::error_code ec;
  if (!fs::remove(p, ec) || ec) {
    fail(Errc::not_found, "no object " + bucket + "/" + key + " in " + zone);
  }
}

std::vector<std::string> ObjectStore::list_prefix(
    const std::string& zone, const std::string& bucket,
    const std::string& prefix) const {
  check_zone_name(zone);
  check_bucket_name(bucket);
  std::vector<std::string> keys;
  fs::path dir = root_ / zone / bucket / "objects";
  std::error_code ec;
  for (const auto& ent : fs::directory_iterator(dir, ec)) {
    std::string key;
    if (!percent_decode(ent.path().filename().string(), key)) continue;
    if (key.compare(0, prefix.size(), prefix) == 0) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

TransferReport ObjectStore::replicate(const std::string& from_zone,
                                      const std::string& to_zone,
                                      const std::string& bucket,
                                      const std::vector<std::string>& keys) {
  check_zone_name(from_zone);
  check_zone_name(to_zone);
  check_bucket_name(bucket);
  for (const auto& key : keys) {
    check_key(key);
    if (!object_exists(from_zone, bucket, key)) {
      fail(Errc::not_found,
           "source object missing: " + bucket + "/" + key + " in " + from_zone);
    }
  }

  TransferReport report;
  uint64_t objects = 0;
  for (const auto& key : keys) {
    std::string bytes = get_object(from_zone, bucket, key);
    bool same = false;
    if (object_exists(to_zone, bucket, key)) {
      same = sha256(get_object(to_zone, bucket, key)) == sha256(bytes);
    }
    if (same) {
      report.skipped.push_back(key);
      continue;
    }
    write_file_atomic(object_path(to_zone, bucket, key), bytes);
    report.transferred.push_back(key);
    report.bytes += bytes.size();
    ++objects;
  }
  if (objects > 0) record_transfer(from_zone, to_zone, report.bytes, objects);
  return report;
}

TransferCounters ObjectStore::transfer_counters(
    const std::string& from_zone, const std::string& to_zone) const {
  std::lock_guard lock(ledger_mu_);
  FileLock flock(root_ / "_transfers.lock", /*exclusive=*/false);
  fs::path p = root_ / "_transfers.json";
  TransferCounters c;
  if (!fs::exists(p)) return c;
  json j = json::parse(read_file(p));
  auto from = j.find(from_zone);
  if (from == j.end()) return c;
  auto to = from->find(to_zone);
  if (to == from->end()) return c;
  c.bytes = to->at("bytes").get<uint64_t>();
  c.objects = to->at("objects").get<uint64_t>();
  return c;
}

void ObjectStore::record_transfer(const std::string& from_zone,
                                  const std::string& to_zone, uint64_t bytes,
                                  uint64_t objects) {
  std::lock_guard lock(ledger_mu_);
  FileLock flock(root_ / "_transfers.lock", /*exclusive=*/true);
  fs::path p = root_ / "_transfers.json";
  json j = fs::exists(p) ? json::parse(read_file(p)) : json::object();
  json& cell = j[from_zone][to_zone];
  uint64_t b = cell.is_object() ? cell.value("bytes", 0ULL) : 0;
  uint64_t o = cell.is_object() ? cell.value("objects", 0ULL) : 0;
  cell = json{{"bytes", b + bytes}, {"objects", o + objects}};
  write_file_atomic(p, canon_dump(j));
}

}  // namespace expd::store
