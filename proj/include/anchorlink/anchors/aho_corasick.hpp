#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anchorlink {

/// Byte-level Aho-Corasick automaton reporting every occurrence of every
/// pattern, overlapping ones included.
class AhoCorasick {
 public:
  struct Match {
    std::size_t pattern = 0;
    std::size_t begin = 0;
    std::size_t end = 0;

    auto operator<=>(const Match&) const = default;
  };

  AhoCorasick() : AhoCorasick(std::span<const std::string>{}) {}
  explicit AhoCorasick(std::span<const std::string> patterns);

  std::size_t state_count() const { return nodes_.size(); }

  /// Matches ordered by end offset, then by decreasing length.
  std::vector<Match> find_all(std::string_view text) const;

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  struct Node {
    std::vector<std::pair<unsigned char, std::uint32_t>> children;  // sorted by byte
    std::uint32_t fail = 0;
    std::uint32_t output = kNone;  // nearest proper suffix state that ends a pattern
    std::uint32_t pattern = kNone;
    std::uint32_t depth = 0;
  };

  std::uint32_t child(std::uint32_t node, unsigned char byte) const;

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> next_duplicate_;  // identical patterns chained by index
};

}  // namespace anchorlink
