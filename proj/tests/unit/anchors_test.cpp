#include <gtest/gtest.h>

#include <sstream>

#include "anchorlink/anchors/aho_corasick.hpp"
#include "anchorlink/anchors/anchor_map.hpp"
#include "anchorlink/rng.hpp"
#include "support/oracles.hpp"

namespace anchorlink {
namespace {

using PatternMap = std::map<std::string, std::set<NodeId>>;

std::vector<AhoCorasick::Match> naive_find_all(std::span<const std::string> patterns, std::string_view text) {
  std::vector<AhoCorasick::Match> out;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    if (patterns[p].empty()) continue;
    for (std::size_t pos = text.find(patterns[p]); pos != std::string_view::npos; pos = text.find(patterns[p], pos + 1)) {
      out.push_back({p, pos, pos + patterns[p].size()});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(AhoCorasick, OverlappingMatches) {
  const std::vector<std::string> patterns{"he", "she", "his", "hers"};
  const AhoCorasick automaton(patterns);
  auto matches = automaton.find_all("ushers");
  std::sort(matches.begin(), matches.end());
  EXPECT_EQ(matches, naive_find_all(patterns, "ushers"));
  EXPECT_EQ(matches.size(), 3u);
}

TEST(AhoCorasick, AgreesWithNaiveSubstringSearch) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> patterns;
    const std::size_t count = 1 + rng.uniform_index(20);
    for (std::size_t i = 0; i < count; ++i) {
      std::string p;
      const std::size_t len = 1 + rng.uniform_index(4);
      for (std::size_t k = 0; k < len; ++k) p += static_cast<char>('a' + rng.uniform_index(3));
      patterns.push_back(p);
    }
    std::string text;
    const std::size_t len = rng.uniform_index(200);
    for (std::size_t k = 0; k < len; ++k) text += static_cast<char>('a' + rng.uniform_index(3));
    auto matches = AhoCorasick(patterns).find_all(text);
    std::sort(matches.begin(), matches.end());
    ASSERT_EQ(matches, naive_find_all(patterns, text)) << trial;
  }
}

TEST(Normalization, CaseFoldAndWhitespace) {
  EXPECT_EQ(normalize_pattern("  United   Kingdom "), "united kingdom");
  EXPECT_EQ(normalize_pattern("U.S."), "u s");
  const NormalizedText n = normalize_for_matching("The  U.K.'s");
  EXPECT_EQ(n.text, "the u k s");
  EXPECT_EQ(n.token_offsets, (std::vector<std::size_t>{0, 4, 6, 8}));
}

TEST(AnchorMap, RejectsUnnormalizedOrEmptyPatterns) {
  EXPECT_THROW(AnchorMap(AnchorMode::kAnchor, PatternMap{{"Upper", {0}}}), ArgumentError);
  EXPECT_THROW(AnchorMap(AnchorMode::kAnchor, PatternMap{{"", {0}}}), ArgumentError);
}

TEST(TitleMap, AliasesAndCollisions) {
  const std::vector<Article> articles{{0, "United Kingdom", "", {"UK", "Britain"}},
                                      {1, "Britain (band)", "", {"Britain"}},
                                      {2, "France", "", {}}};
  const AnchorMap map = build_title_map(articles);
  EXPECT_EQ(map.mode(), AnchorMode::kTitle);
  EXPECT_EQ(map.targets(*map.find("uk")), std::vector<NodeId>{0});
  EXPECT_EQ(map.targets(*map.find("united kingdom")), std::vector<NodeId>{0});
  EXPECT_EQ(map.targets(*map.find("britain")), (std::vector<NodeId>{0, 1}));
  EXPECT_FALSE(map.find("germany"));
}

TEST(AnchorMapBuild, MatchesExhaustiveEdgeScan) {
  const DocumentNetwork net = DocumentNetwork::Builder(4)
                                  .add(0, 1, "federal government")
                                  .add(2, 1, "Federal  Government")
                                  .add(0, 3, "state")
                                  .add(1, 2, "state")
                                  .build();
  const AnchorMap map = build_anchor_map(net);
  PatternMap expected;
  for (const Edge& e : net.edges())
    for (const std::string& a : net.anchors(net.edge_index(e.source, e.target)))
      expected[normalize_pattern(a)].insert(e.target);
  ASSERT_EQ(map.size(), expected.size());
  for (const auto& [pattern, targets] : expected) {
    const auto index = map.find(pattern);
    ASSERT_TRUE(index) << pattern;
    EXPECT_EQ(map.targets(*index), std::vector<NodeId>(targets.begin(), targets.end()));
  }
}

TEST(ScanCandidates, Examples) {
  const AnchorMap map(AnchorMode::kAnchor, PatternMap{{"political", {4}}, {"american", {1}}, {"american civil war", {2}}});
  auto candidates = scan_candidates(map, 0, "A political figure.");
  ASSERT_EQ(candidates.size(), 1u);
  EXPECT_EQ(candidates[0].target, 4u);
  EXPECT_TRUE(scan_candidates(map, 0, "").empty());

  candidates = scan_candidates(map, 0, "The American Civil War");
  ASSERT_EQ(candidates.size(), 2u);
  EXPECT_EQ(candidates[0].target, 1u);
  EXPECT_EQ(candidates[0].matched, (std::vector<PatternMatch>{{"american", 4, 12}}));
  EXPECT_EQ(candidates[1].matched, (std::vector<PatternMatch>{{"american civil war", 4, 22}}));
}

TEST(ScanCandidates, TokenBoundariesAndSelfPairs) {
  const AnchorMap map(AnchorMode::kAnchor, PatternMap{{"art", {1}}, {"party", {0}}});
  EXPECT_TRUE(scan_candidates(map, 0, "a party").empty());  // "art" inside "party"; "party" is a self-pair
  EXPECT_EQ(scan_candidates(map, 2, "a party").size(), 1u);
}

TEST(ScanCandidates, SpansNormalizeToTheirPattern) {
  const AnchorMap map(AnchorMode::kAnchor, PatternMap{{"new york", {1}}, {"york", {2}}});
  const std::string abstract = "Flights to NEW  York, and york.";
  for (const CandidatePair& pair : scan_candidates(map, 0, abstract)) {
    for (const PatternMatch& m : pair.matched) {
      EXPECT_EQ(normalize_pattern(abstract.substr(m.begin, m.end - m.begin)), m.pattern);
    }
  }
}

std::string random_words(Rng& rng, std::size_t count, const std::vector<std::string>& lexicon) {
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) text += rng.uniform_index(5) == 0 ? ", " : " ";
    std::string w = lexicon[rng.uniform_index(lexicon.size())];
    if (rng.uniform_index(4) == 0) w[0] = static_cast<char>(std::toupper(w[0]));
    text += w;
  }
  return text;
}

TEST(ScanCandidates, AgreesWithNaiveOracleOnRandomFixtures) {
  Rng rng(22);
  const std::vector<std::string> lexicon{"war", "civil", "state", "united", "art", "party", "arts", "new", "york", "a"};
  for (int trial = 0; trial < 200; ++trial) {
    PatternMap patterns;
    const std::size_t count = 1 + rng.uniform_index(15);
    for (std::size_t i = 0; i < count; ++i) {
      patterns[normalize_pattern(random_words(rng, 1 + rng.uniform_index(3), lexicon))].insert(
          static_cast<NodeId>(rng.uniform_index(6)));
    }
    const AnchorMap map(AnchorMode::kAnchor, patterns);
    const std::string abstract = random_words(rng, rng.uniform_index(60), lexicon);
    const NodeId source = static_cast<NodeId>(rng.uniform_index(6));
    ASSERT_EQ(scan_candidates(map, source, abstract), testing::naive_scan(map, source, abstract)) << trial;
  }
}

TEST(EvalSamples, SingleEdgeGivesOnePositive) {
  const std::vector<Article> articles{{0, "A", "see the beta page", {}}, {1, "Beta", "nothing", {}}};
  const DocumentNetwork net = DocumentNetwork::Builder(2).add(0, 1, "beta").build();
  const auto samples = build_eval_samples(net, build_anchor_map(net), articles);
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples[0].positives.size(), 1u);
  EXPECT_TRUE(samples[0].negatives.empty());
  EXPECT_EQ(samples[0].positives[0].label, std::optional<bool>(true));
}

TEST(EvalSamples, MatchesBruteForceLabelsAndRecallIsOne) {
  const std::vector<Article> articles{
      {0, "Alpha", "alpha meets beta and gamma", {}},
      {1, "Beta", "beta knows alpha", {}},
      {2, "Gamma", "gamma and delta with beta", {}},
      {3, "Delta", "delta likes gamma ray", {}},
      {4, "Epsilon", "alpha beta gamma delta", {}},
  };
  const DocumentNetwork net = DocumentNetwork::Builder(5)
                                  .add(0, 1, "beta")
                                  .add(1, 0, "alpha")
                                  .add(2, 3, "delta")
                                  .add(3, 2, "gamma ray")
                                  .add(4, 0, "alpha")
                                  .add(4, 2, "gamma")
                                  .build();
  const AnchorMap map = build_anchor_map(net);
  const auto samples = build_eval_samples(net, map, articles);
  std::size_t positives = 0;
  for (const DocumentSamples& doc : samples) {
    std::vector<std::pair<NodeId, bool>> got;
    for (const auto& p : doc.positives) got.emplace_back(p.target, true);
    for (const auto& n : doc.negatives) got.emplace_back(n.target, false);
    std::sort(got.begin(), got.end());
    std::vector<std::pair<NodeId, bool>> expected;
    for (const CandidatePair& c : testing::naive_scan(map, doc.source, articles[doc.source].abstract)) {
      expected.emplace_back(c.target, net.has_edge(doc.source, c.target));
    }
    EXPECT_EQ(got, expected) << doc.source;
    positives += doc.positives.size();
    for (const auto& n : doc.negatives) EXPECT_FALSE(n.matched.empty());
  }
  EXPECT_EQ(positives, net.edge_count());
}

TEST(CandidateIndex, LookupAndSamplesExport) {
  const std::vector<Article> articles{{0, "A", "see beta", {}}, {1, "Beta", "back to a", {}}};
  const DocumentNetwork net = DocumentNetwork::Builder(2).add(0, 1, "beta").build();
  const AnchorMap map = build_anchor_map(net);
  const CandidateIndex index(map, articles);
  ASSERT_NE(index.find(0, 1), nullptr);
  EXPECT_EQ(index.find(1, 0), nullptr);
  std::ostringstream out;
  write_samples(out, build_eval_samples(net, map, articles));
  EXPECT_EQ(out.str(), "0\t1\t1\tbeta\n");
}

}  // namespace
}  // namespace anchorlink
