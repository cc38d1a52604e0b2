#include "anchorlink/anchors/anchor_map.hpp"

#include <algorithm>
#include <ostream>

#include "anchorlink/dataset.hpp"

namespace anchorlink {

NormalizedText normalize_for_matching(std::string_view text) {
  NormalizedText out;
  out.tokens = tokenize_with_spans(text);
  out.token_offsets.reserve(out.tokens.size());
  for (const auto& token : out.tokens) {
    if (!out.text.empty()) out.text.push_back(' ');
    out.token_offsets.push_back(out.text.size());
    out.text.append(token.text);
  }
  return out;
}

std::string normalize_pattern(std::string_view text) { return normalize_for_matching(text).text; }

std::string_view anchor_mode_name(AnchorMode mode) {
  return mode == AnchorMode::kTitle ? "title" : "anchor";
}

namespace {

std::vector<std::string> keys_of(const std::map<std::string, std::set<NodeId>>& patterns) {
  std::vector<std::string> keys;
  keys.reserve(patterns.size());
  for (const auto& [pattern, targets] : patterns) keys.push_back(pattern);
  return keys;
}

}  // namespace

AnchorMap::AnchorMap(AnchorMode mode, const std::map<std::string, std::set<NodeId>>& patterns)
    : mode_(mode), patterns_(keys_of(patterns)), automaton_(patterns_) {
  targets_.reserve(patterns.size());
  for (const auto& [pattern, targets] : patterns) {
    if (pattern.empty() || pattern != normalize_pattern(pattern)) {
      throw ArgumentError("anchor map pattern is not normalized: '" + pattern + "'");
    }
    if (targets.empty()) throw ArgumentError("anchor map pattern without targets: " + pattern);
    targets_.emplace_back(targets.begin(), targets.end());
  }
}

std::optional<std::size_t> AnchorMap::find(std::string_view normalized) const {
  const auto it = std::lower_bound(patterns_.begin(), patterns_.end(), normalized);
  if (it == patterns_.end() || *it != normalized) return std::nullopt;
  return static_cast<std::size_t>(it - patterns_.begin());
}

AnchorMap build_title_map(std::span<const Article> articles) {
  std::map<std::string, std::set<NodeId>> patterns;
  for (const auto& article : articles) {
    if (auto p = normalize_pattern(article.title); !p.empty()) patterns[std::move(p)].insert(article.id);
    for (const auto& alias : article.aliases) {
      if (auto p = normalize_pattern(alias); !p.empty()) patterns[std::move(p)].insert(article.id);
    }
  }
  return AnchorMap(AnchorMode::kTitle, patterns);
}

AnchorMap build_anchor_map(const DocumentNetwork& network) {
  std::map<std::string, std::set<NodeId>> patterns;
  for (std::size_t e = 0; e < network.edge_count(); ++e) {
    const NodeId target = network.edge(e).target;
    for (const auto& anchor : network.anchors(e)) {
      if (auto p = normalize_pattern(anchor); !p.empty()) patterns[std::move(p)].insert(target);
    }
  }
  return AnchorMap(AnchorMode::kAnchor, patterns);
}

std::vector<CandidatePair> scan_candidates(const AnchorMap& map, NodeId source,
                                           std::string_view abstract) {
  const NormalizedText normalized = normalize_for_matching(abstract);
  const std::string& text = normalized.text;
  std::map<NodeId, CandidatePair> by_target;
  for (const auto& match : map.automaton().find_all(text)) {
    const bool left = match.begin == 0 || text[match.begin - 1] == ' ';
    const bool right = match.end == text.size() || text[match.end] == ' ';
    if (!left || !right) continue;
    const auto& offsets = normalized.token_offsets;
    const auto first = static_cast<std::size_t>(
        std::lower_bound(offsets.begin(), offsets.end(), match.begin) - offsets.begin());
    const auto last = static_cast<std::size_t>(
        std::upper_bound(offsets.begin(), offsets.end(), match.end - 1) - offsets.begin() - 1);
    const PatternMatch found{map.pattern(match.pattern), normalized.tokens[first].begin,
                             normalized.tokens[last].end};
    for (const NodeId target : map.targets(match.pattern)) {
      if (target == source) continue;
      auto& pair = by_target[target];
      pair.source = source;
      pair.target = target;
      pair.matched.push_back(found);
    }
  }
  std::vector<CandidatePair> out;
  out.reserve(by_target.size());
  for (auto& [target, pair] : by_target) {
    std::sort(pair.matched.begin(), pair.matched.end());
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<std::string> matched_strings(const CandidatePair& pair) {
  std::vector<std::string> out;
  for (const auto& match : pair.matched) {
    if (std::find(out.begin(), out.end(), match.pattern) == out.end()) out.push_back(match.pattern);
  }
  return out;
}

std::vector<DocumentSamples> build_eval_samples(const DocumentNetwork& network, const AnchorMap& map,
                                                std::span<const Article> articles) {
  std::vector<DocumentSamples> samples;
  samples.reserve(articles.size());
  for (const auto& article : articles) {
    DocumentSamples doc;
    doc.source = article.id;
    for (auto& pair : scan_candidates(map, article)) {
      const bool linked = network.has_edge(pair.source, pair.target);
      pair.label = linked;
      (linked ? doc.positives : doc.negatives).push_back(std::move(pair));
    }
    samples.push_back(std::move(doc));
  }
  return samples;
}

CandidateIndex::CandidateIndex(const AnchorMap& map, std::span<const Article> articles) {
  by_source_.resize(articles.size());
  for (const auto& article : articles) by_source_.at(article.id) = scan_candidates(map, article);
}

const CandidatePair* CandidateIndex::find(NodeId source, NodeId target) const {
  if (source >= by_source_.size()) return nullptr;
  const auto& row = by_source_[source];
  const auto it = std::lower_bound(row.begin(), row.end(), target,
                                   [](const CandidatePair& p, NodeId t) { return p.target < t; });
  if (it == row.end() || it->target != target) return nullptr;
  return &*it;
}

void write_samples(std::ostream& out, std::span<const DocumentSamples> samples) {
  auto write_row = [&](const CandidatePair& pair, int label) {
    out << pair.source << '\t' << pair.target << '\t' << label << '\t';
    bool first = true;
    for (const auto& s : matched_strings(pair)) {
      if (!first) out << '|';
      out << escape_field(s);
      first = false;
    }
    out << '\n';
  };
  for (const auto& doc : samples) {
    std::vector<std::pair<const CandidatePair*, int>> rows;
    for (const auto& p : doc.positives) rows.emplace_back(&p, 1);
    for (const auto& p : doc.negatives) rows.emplace_back(&p, 0);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first->target < b.first->target; });
    for (const auto& [pair, label] : rows) write_row(*pair, label);
  }
}

}  // namespace anchorlink
