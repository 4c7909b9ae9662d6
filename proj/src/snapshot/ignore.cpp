#include "snapshot/ignore.hpp"

#include <cstring>
#include <fstream>

namespace expd::snap {

namespace {

std::string glob_to_regex(std::string_view glob) {
  std::string re = "^";
  size_t i = 0;
  while (i < glob.size()) {
    char c = glob[i];
    if (c == '*') {
      if (i + 1 < glob.size() && glob[i + 1] == '*') {
        if (i + 2 < glob.size() && glob[i + 2] == '/') {
          re += "(.*/)?";
          i += 3;
        } else {
          re += ".*";
          i += 2;
        }
        continue;
      }
      re += "[^/]*";
      ++i;
      continue;
    }
    if (c == '?') {
      re += "[^/]";
      ++i;
      continue;
    }
    if (c == '[') {
      size_t j = i + 1;
      std::string cls = "[";
      if (j < glob.size() && glob[j] == '!') {
        cls += '^';
        ++j;
      }
      bool closed = false;
      while (j < glob.size()) {
        char d = glob[j];
        if (d == ']' && cls.size() > 1) {
          cls += ']';
          closed = true;
          ++j;
          break;
        }
        if (d == '\\') cls += "\\\\";
        else cls += d;
        ++j;
      }
      if (closed) {
        re += cls;
        i = j;
      } else {
        re += "\\[";
        ++i;
      }
      continue;
    }
    if (std::strchr(".^$+(){}|\\", c) != nullptr) {
      re += '\\';
    }
    re += c;
    ++i;
  }
  re += "$";
  return re;
}

std::string_view basename_of(std::string_view path) {
  size_t pos = path.rfind('/');
  return pos == std::string_view::npos ? path : path.substr(pos + 1);
}

}  // namespace

IgnoreRules IgnoreRules::from_lines(const std::vector<std::string>& lines) {
  IgnoreRules rules;
  for (std::string line : lines) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    Rule r;
    std::string_view pat = line;
    if (pat[0] == '!') {
      r.negate = true;
      pat.remove_prefix(1);
    }
    if (!pat.empty() && pat.back() == '/') {
      r.dir_only = true;
      pat.remove_suffix(1);
    }
    if (!pat.empty() && pat[0] == '/') pat.remove_prefix(1);
    if (pat.empty()) continue;
    r.full_path = pat.find('/') != std::string_view::npos;
    r.re = std::regex(glob_to_regex(pat));
    rules.rules_.push_back(std::move(r));
  }
  return rules;
}

IgnoreRules IgnoreRules::load(const std::filesystem::path& workspace_root) {
  std::ifstream in(workspace_root / ".jtignore");
  if (!in) return IgnoreRules();
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return from_lines(lines);
}

bool IgnoreRules::ignored(const std::string& rel_path, bool is_dir) const {
  if (rel_path == ".jt") return true;
  bool result = false;
  for (const auto& r : rules_) {
    if (r.dir_only && !is_dir) continue;
    std::string_view subject =
        r.full_path ? std::string_view(rel_path) : basename_of(rel_path);
    if (std::regex_match(subject.begin(), subject.end(), r.re)) {
      result = !r.negate;
    }
  }
  return result;
}

}  // namespace expd::snap
