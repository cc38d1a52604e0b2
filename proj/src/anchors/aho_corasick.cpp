#include "anchorlink/anchors/aho_corasick.hpp"

#include <algorithm>
#include <queue>

namespace anchorlink {

std::uint32_t AhoCorasick::child(std::uint32_t node, unsigned char byte) const {
  const auto& children = nodes_[node].children;
  const auto it = std::lower_bound(children.begin(), children.end(), byte,
                                   [](const auto& entry, unsigned char b) { return entry.first < b; });
  if (it == children.end() || it->first != byte) return kNone;
  return it->second;
}

AhoCorasick::AhoCorasick(std::span<const std::string> patterns)
    : next_duplicate_(patterns.size(), kNone) {
  nodes_.emplace_back();
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    std::uint32_t node = 0;
    for (const char c : patterns[p]) {
      const auto byte = static_cast<unsigned char>(c);
      std::uint32_t next = child(node, byte);
      if (next == kNone) {
        next = static_cast<std::uint32_t>(nodes_.size());
        nodes_.emplace_back();
        nodes_[next].depth = nodes_[node].depth + 1;
        auto& children = nodes_[node].children;
        const auto at = std::lower_bound(children.begin(), children.end(), byte,
                                         [](const auto& entry, unsigned char b) { return entry.first < b; });
        children.insert(at, {byte, next});
      }
      node = next;
    }
    if (patterns[p].empty()) continue;
    if (nodes_[node].pattern == kNone) {
      nodes_[node].pattern = static_cast<std::uint32_t>(p);
    } else {
      std::uint32_t last = nodes_[node].pattern;
      while (next_duplicate_[last] != kNone) last = next_duplicate_[last];
      next_duplicate_[last] = static_cast<std::uint32_t>(p);
    }
  }

  std::queue<std::uint32_t> frontier;
  for (const auto& [byte, next] : nodes_[0].children) {
    nodes_[next].fail = 0;
    frontier.push(next);
  }
  while (!frontier.empty()) {
    const std::uint32_t node = frontier.front();
    frontier.pop();
    for (const auto& [byte, next] : nodes_[node].children) {
      std::uint32_t f = nodes_[node].fail;
      while (f != 0 && child(f, byte) == kNone) f = nodes_[f].fail;
      const std::uint32_t target = child(f, byte);
      nodes_[next].fail = (target != kNone && target != next) ? target : 0;
      const Node& fail = nodes_[nodes_[next].fail];
      nodes_[next].output = fail.pattern != kNone ? nodes_[next].fail : fail.output;
      frontier.push(next);
    }
  }
}

std::vector<AhoCorasick::Match> AhoCorasick::find_all(std::string_view text) const {
  std::vector<Match> matches;
  std::uint32_t state = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    while (state != 0 && child(state, byte) == kNone) state = nodes_[state].fail;
    const std::uint32_t next = child(state, byte);
    state = next == kNone ? 0 : next;
    std::uint32_t hit = nodes_[state].pattern != kNone ? state : nodes_[state].output;
    while (hit != kNone) {
      const Node& node = nodes_[hit];
      for (std::uint32_t p = node.pattern; p != kNone; p = next_duplicate_[p]) {
        matches.push_back(Match{p, i + 1 - node.depth, i + 1});
      }
      hit = node.output;
    }
  }
  return matches;
}

}  // namespace anchorlink
