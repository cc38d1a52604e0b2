#include "anchorlink/text/tokenizer.hpp"

#include "anchorlink/text/utf8.hpp"

namespace anchorlink {

std::vector<Token> tokenize_with_spans(std::string_view text) {
  std::vector<Token> tokens;
  Token current;
  bool in_token = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(text, pos);
    if (utf8::is_alnum(cp)) {
      if (!in_token) {
        current = Token{{}, start, start};
        in_token = true;
      }
      utf8::append(current.text, utf8::to_lower(cp));
      current.end = pos;
    } else if (in_token) {
      tokens.push_back(std::move(current));
      in_token = false;
    }
  }
  if (in_token) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : tokenize_with_spans(text)) out.push_back(std::move(token.text));
  return out;
}

}  // namespace anchorlink
