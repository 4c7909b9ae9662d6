#pragma once

#include <filesystem>
#include <regex>
#include <string>
#include <vector>

namespace expd::snap {

// gitignore-style rules from a `.jtignore` file: one glob per line, `#`
// comments, `!` negation (last matching rule wins), trailing `/` restricts a
// rule to directories, a rule containing `/` matches the whole relative path,
// otherwise any path segment. `**` crosses directory boundaries, `*` and `?`
// do not. The `.jt/` workspace metadata directory is always ignored.
class IgnoreRules {
 public:
  IgnoreRules() = default;
  static IgnoreRules from_lines(const std::vector<std::string>& lines);
  // Reads `<workspace_root>/.jtignore` when present.
  static IgnoreRules load(const std::filesystem::path& workspace_root);

  bool ignored(const std::string& rel_path, bool is_dir) const;

 private:
  struct Rule {
    std::regex re;
    bool dir_only = false;
    bool negate = false;
    bool full_path = false;  // pattern contained '/'
  };
  std::vector<Rule> rules_;
};

}  // namespace expd::snap
