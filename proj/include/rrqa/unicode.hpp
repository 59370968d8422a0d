#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace rrqa::uni {

/// Decode one UTF-8 sequence starting at `pos`. Writes the codepoint to `cp`
/// and returns the number of bytes consumed (1 for invalid lead bytes, which
/// are treated as Latin-1).
size_t decode(std::string_view text, size_t pos, uint32_t& cp);

/// Append the UTF-8 encoding of `cp` to `out`.
void append(std::string& out, uint32_t cp);

bool is_letter(uint32_t cp);
bool is_digit(uint32_t cp);
bool is_alnum(uint32_t cp);
bool is_space(uint32_t cp);

/// Simple (single-codepoint) lowercase mapping; identity when no mapping exists.
uint32_t to_lower(uint32_t cp);

}  // namespace rrqa::uni
