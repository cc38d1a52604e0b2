#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anchorlink/anchors/aho_corasick.hpp"
#include "anchorlink/article.hpp"
#include "anchorlink/graph/network.hpp"
#include "anchorlink/text/tokenizer.hpp"

namespace anchorlink {

/// Text reduced to its lowercased word tokens joined by single spaces, with
/// the byte span of every token in the original text.
struct NormalizedText {
  std::string text;
  std::vector<std::size_t> token_offsets;  // start of each token in `text`
  std::vector<Token> tokens;               // spans in the original text
};

NormalizedText normalize_for_matching(std::string_view text);

/// Normalized form of a pattern string; empty when it has no word token.
std::string normalize_pattern(std::string_view text);

enum class AnchorMode { kTitle, kAnchor };

std::string_view anchor_mode_name(AnchorMode mode);

/// Normalized string -> set of target article ids, with a multi-pattern
/// automaton over all strings. Immutable once built.
class AnchorMap {
 public:
  AnchorMap(AnchorMode mode, const std::map<std::string, std::set<NodeId>>& patterns);

  AnchorMode mode() const { return mode_; }
  std::size_t size() const { return patterns_.size(); }
  const std::string& pattern(std::size_t index) const { return patterns_[index]; }
  const std::vector<NodeId>& targets(std::size_t index) const { return targets_[index]; }
  std::optional<std::size_t> find(std::string_view normalized) const;
  const AhoCorasick& automaton() const { return automaton_; }

 private:
  AnchorMode mode_;
  std::vector<std::string> patterns_;
  std::vector<std::vector<NodeId>> targets_;
  AhoCorasick automaton_;
};

/// Every canonical title and redirect alias maps to its article.
AnchorMap build_title_map(std::span<const Article> articles);

/// Every anchor string of every edge maps to the edge target.
AnchorMap build_anchor_map(const DocumentNetwork& network);

/// A matched pattern and the byte span in the source abstract it covers.
struct PatternMatch {
  std::string pattern;
  std::size_t begin = 0;
  std::size_t end = 0;

  auto operator<=>(const PatternMatch&) const = default;
};

struct CandidatePair {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<PatternMatch> matched;
  std::optional<bool> label;

  bool operator==(const CandidatePair&) const = default;
};

/// All targets whose patterns occur in the abstract on token boundaries, one
/// pair per target (ascending), aggregating every match. Self-pairs dropped.
std::vector<CandidatePair> scan_candidates(const AnchorMap& map, NodeId source,
                                           std::string_view abstract);

inline std::vector<CandidatePair> scan_candidates(const AnchorMap& map, const Article& article) {
  return scan_candidates(map, article.id, article.abstract);
}

/// Distinct matched pattern strings of a pair, in first-occurrence order.
std::vector<std::string> matched_strings(const CandidatePair& pair);

struct DocumentSamples {
  NodeId source = 0;
  std::vector<CandidatePair> positives;
  std::vector<CandidatePair> negatives;
};

/// Candidates of every document labeled against `network`: positives are
/// existing edges, negatives (hard negatives) are matched non-edges.
std::vector<DocumentSamples> build_eval_samples(const DocumentNetwork& network, const AnchorMap& map,
                                                std::span<const Article> articles);

/// Candidates of every article under one map, precomputed for lookup.
class CandidateIndex {
 public:
  CandidateIndex(const AnchorMap& map, std::span<const Article> articles);

  const std::vector<CandidatePair>& of(NodeId source) const { return by_source_[source]; }
  const CandidatePair* find(NodeId source, NodeId target) const;
  std::size_t size() const { return by_source_.size(); }

 private:
  std::vector<std::vector<CandidatePair>> by_source_;
};

/// samples.tsv rows: source \t target \t label \t matched strings joined by '|'.
void write_samples(std::ostream& out, std::span<const DocumentSamples> samples);

}  // namespace anchorlink
