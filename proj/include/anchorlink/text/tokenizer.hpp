#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace anchorlink {

/// A token together with the byte range it was read from.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Lowercased maximal runs of alphanumeric code points. No stemming and no
/// stop words.
std::vector<std::string> tokenize(std::string_view text);

std::vector<Token> tokenize_with_spans(std::string_view text);

}  // namespace anchorlink
