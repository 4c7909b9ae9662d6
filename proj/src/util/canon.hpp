#pragma once

#include <string>

#include <json.hpp>

namespace expd {

// nlohmann::json keeps object keys in a sorted std::map, so a compact dump is
// already the canonical form used for hashing and persistence: UTF-8, keys in
// lexicographic order, no insignificant whitespace.
using json = nlohmann::json;

inline std::string canon_dump(const json& j) { return j.dump(); }

}  // namespace expd
