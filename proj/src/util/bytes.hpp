#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace expd {

std::string to_hex(const uint8_t* data, size_t len);
std::string to_hex(std::string_view data);
// Returns false on odd length or non-hex characters.
bool from_hex(std::string_view hex, std::string& out);

std::string base64_encode(std::string_view data);
bool base64_decode(std::string_view text, std::string& out);

// RFC 3986 percent-encoding keeping only the unreserved set
// (ALPHA / DIGIT / "-" / "." / "_" / "~"). Used to map object keys to
// filesystem-safe names.
std::string percent_encode(std::string_view s);
bool percent_decode(std::string_view s, std::string& out);

bool is_valid_utf8(std::string_view s);

void put_u32_be(std::string& out, uint32_t v);
uint32_t get_u32_be(const uint8_t* p);
void put_u64_be(std::string& out, uint64_t v);
uint64_t get_u64_be(const uint8_t* p);

}  // namespace expd
