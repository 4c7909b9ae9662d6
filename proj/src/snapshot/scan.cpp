#include "snapshot/scan.hpp"

#include <sys/stat.h>

#include <algorithm>

#include "util/bytes.hpp"
#include "util/err.hpp"
#include "util/fsutil.hpp"

namespace expd::snap {

namespace {

void walk(const fs::path& root, const std::string& rel_prefix,
          const IgnoreRules& rules, std::vector<FileEntry>& out) {
  for (const auto& ent : fs::directory_iterator(root / rel_prefix)) {
    std::string name = ent.path().filename().string();
    std::string rel = rel_prefix.empty() ? name : rel_prefix + "/" + name;
    if (!is_valid_utf8(rel)) {
      fail(Errc::unsupported_file_type, "non-UTF-8 path: " + rel);
    }
    auto st = ent.symlink_status();
    bool is_dir = fs::is_directory(st);
    if (rules.ignored(rel, is_dir)) continue;

    if (fs::is_symlink(st)) {
      FileEntry e;
      e.path = rel;
      e.kind = FileKind::symlink;
      e.link_target = fs::read_symlink(ent.path()).string();
      out.push_back(std::move(e));
    } else if (fs::is_regular_file(st)) {
      FileEntry e;
      e.path = rel;
      e.kind = FileKind::file;
      e.digest = hash_file(ent.path());
      e.size = fs::file_size(ent.path());
      e.executable = (st.permissions() & (fs::perms::owner_exec |
                                          fs::perms::group_exec |
                                          fs::perms::others_exec)) !=
                     fs::perms::none;
      out.push_back(std::move(e));
    } else if (is_dir) {
      walk(root, rel, rules, out);
    } else {
      fail(Errc::unsupported_file_type,
           "unsupported file type at " + rel + " (socket, device or FIFO)");
    }
  }
}

}  // namespace

std::vector<FileEntry> scan_workspace(const fs::path& dir,
                                      const IgnoreRules& rules) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    fail(Errc::not_a_directory, dir.string() + " is not a directory");
  }
  std::vector<FileEntry> out;
  walk(dir, "", rules, out);
  std::sort(out.begin(), out.end(),
            [](const FileEntry& a, const FileEntry& b) { return a.path < b.path; });
  return out;
}

}  // namespace expd::snap
