#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace anchorlink::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes the code point starting at `text[pos]` and advances `pos` past it.
/// Invalid sequences decode as U+FFFD and consume a single byte.
char32_t decode(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

/// Letter or digit under a compact approximation of the Unicode categories:
/// ASCII alphanumerics, plus every non-ASCII code point outside the
/// punctuation, symbol, space and control blocks.
bool is_alnum(char32_t cp);

bool is_space(char32_t cp);

/// Simple one-to-one case mapping for Latin, Greek and Cyrillic.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

std::string lower(std::string_view text);

}  // namespace anchorlink::utf8
