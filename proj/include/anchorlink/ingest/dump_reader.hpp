#pragma once

#include <cstdint>
#include <deque>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace anchorlink {

/// One <page> element of a MediaWiki export.
struct RawPage {
  std::string title;
  int namespace_id = 0;
  std::string wikitext;
  bool is_redirect = false;
  std::optional<std::string> redirect_target;
};

/// Pull-style streaming reader over a pages-articles XML export. Memory use
/// is bounded by the read chunk plus the largest single page.
class DumpReader {
 public:
  explicit DumpReader(std::istream& input, std::size_t chunk_size = 1 << 16);
  ~DumpReader();

  DumpReader(const DumpReader&) = delete;
  DumpReader& operator=(const DumpReader&) = delete;

  /// Next page in document order, or nullopt at end of input. Throws
  /// ParseError on malformed XML.
  std::optional<RawPage> next();

  /// Pages skipped because a required element (title, text) was missing.
  std::uint64_t skipped_pages() const noexcept;

  std::uint64_t bytes_read() const noexcept { return bytes_read_; }

  struct State;

 private:
  bool fill();

  std::istream& input_;
  std::vector<char> buffer_;
  std::unique_ptr<State> state_;
  std::uint64_t bytes_read_ = 0;
  bool finished_ = false;
};

/// Recognizes "#REDIRECT [[Target]]" (case-insensitive, optional colon) at
/// the start of the wikitext and returns the normalized target title.
std::optional<std::string> parse_redirect_directive(std::string_view wikitext);

/// MediaWiki title normalization: underscores become spaces, whitespace is
/// collapsed and trimmed, and the first character is uppercased.
std::string normalize_title(std::string_view title);

}  // namespace anchorlink
