#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/scratch.hpp"
#include "anchorlink/dataset.hpp"
#include "anchorlink/ingest/dump_reader.hpp"
#include "anchorlink/ingest/pipeline.hpp"
#include "anchorlink/ingest/redirects.hpp"
#include "anchorlink/ingest/wikitext.hpp"

namespace anchorlink {
namespace {

namespace fs = std::filesystem;

std::string page_xml(const std::string& title, int ns, const std::string& text) {
  return "<page><title>" + title + "</title><ns>" + std::to_string(ns) +
         "</ns><revision><text xml:space=\"preserve\">" + text + "</text></revision></page>";
}

std::string dump_xml(const std::string& pages) {
  return "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\">" + pages + "</mediawiki>";
}

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = testing::scratch_path(name);
  fs::remove_all(dir);
  return dir;
}

TEST(ExtractAbstract, StopsAtFirstHeading) {
  EXPECT_EQ(extract_abstract("Text. == History == More."), "Text.");
}

TEST(ExtractAbstract, DropsTemplatesEvenNested) {
  EXPECT_EQ(extract_abstract("{{Infobox person|name={{nowrap|Abraham}}}}Abraham Lincoln was..."),
            "Abraham Lincoln was...");
}

TEST(ExtractAbstract, EmptyInput) { EXPECT_EQ(extract_abstract(""), ""); }

TEST(ExtractAbstract, RemovesCommentsRefsFilesAndFormatting) {
  const std::string text =
      "'''Delaware'''<!-- hidden --> is a [[U.S. state|state]].<ref name=\"a\">cite</ref><ref name=\"b\"/> "
      "[[File:Flag.svg|thumb|A [[flag]] image]] It is &amp; was small.";
  EXPECT_EQ(extract_abstract(text), "Delaware is a [[U.S. state|state]]. It is & was small.");
}

TEST(ExtractAbstract, UnbalancedTemplateDropsRestAndWarns) {
  MarkupWarnings warnings;
  EXPECT_EQ(extract_abstract("Kept text. {{Broken template never closes [[Link]]", &warnings), "Kept text.");
  EXPECT_EQ(warnings.unbalanced_templates, 1u);
  EXPECT_EQ(warnings.total(), 1u);
}

TEST(ExtractWikilinks, PipedAndPlainLinks) {
  auto links = extract_wikilinks("the [[American Civil War|American Civil War]] began", 3);
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].source, 3u);
  EXPECT_EQ(links[0].target_title, "American Civil War");
  EXPECT_EQ(links[0].anchor_text, "American Civil War");

  links = extract_wikilinks("over [[Slavery in the United States|slavery]].", 0);
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].target_title, "Slavery in the United States");
  EXPECT_EQ(links[0].anchor_text, "slavery");

  links = extract_wikilinks("[[Politics]]", 0);
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].target_title, "Politics");
  EXPECT_EQ(links[0].anchor_text, "Politics");
}

TEST(ExtractWikilinks, SectionSuffixIsTruncated) {
  const auto links = extract_wikilinks("[[Joe Biden#Early life|his youth]]", 0);
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].target_title, "Joe Biden");
  EXPECT_EQ(links[0].anchor_text, "his youth");
}

TEST(ExtractWikilinks, NamespaceLinksAreDropped) {
  const LinkedText rendered = render_wikilinks("See [[Category:Presidents]] and [[Wikipedia:About|about]] it", 0);
  EXPECT_TRUE(rendered.links.empty());
  EXPECT_TRUE(has_namespace_prefix("Category:Presidents"));
  EXPECT_FALSE(has_namespace_prefix("Star Wars: Episode IV"));
}

TEST(ExtractWikilinks, UnclosedLinkIsLiteralAndWarns) {
  MarkupWarnings warnings;
  const LinkedText rendered = render_wikilinks("broken [[Politics link", 0, &warnings);
  EXPECT_TRUE(rendered.links.empty());
  EXPECT_EQ(rendered.text, "broken [[Politics link");
  EXPECT_EQ(warnings.unclosed_links, 1u);
}

TEST(ExtractWikilinks, SpansRoundTripThroughRenderedText) {
  const LinkedText rendered = render_wikilinks(
      "[[Joe Biden]] served under [[Barack Obama|Obama]] as [[Vice President of the United States|VP]]; "
      "he likes [[train]]s and [[Amtrak|Amtrak's]] service.",
      0);
  ASSERT_EQ(rendered.links.size(), 5u);
  for (const AnchorOccurrence& link : rendered.links) {
    EXPECT_EQ(rendered.text.substr(link.begin, link.end - link.begin), link.anchor_text);
  }
  EXPECT_EQ(rendered.links[3].anchor_text, "trains");
  EXPECT_EQ(rendered.links[3].target_title, "Train");
}

TEST(Redirects, SimpleAlias) {
  const std::vector<TitleRecord> pages{{"United Kingdom", std::nullopt}, {"UK", "United Kingdom"}};
  const RedirectMap map = resolve_redirects(pages);
  ASSERT_EQ(map.canonical.size(), 1u);
  EXPECT_EQ(map.canonical.at("UK"), "United Kingdom");
}

TEST(Redirects, ChainsResolveTransitively) {
  const std::vector<TitleRecord> pages{{"A", "B"}, {"B", "C"}, {"C", std::nullopt}};
  const RedirectMap map = resolve_redirects(pages);
  EXPECT_EQ(map.canonical.at("A"), "C");
  EXPECT_EQ(map.canonical.at("B"), "C");
}

TEST(Redirects, CyclesAndDeadTargetsAreDropped) {
  const std::vector<TitleRecord> pages{{"A", "B"}, {"B", "A"}, {"D", "Nowhere"}, {"E", "A"}};
  const RedirectMap map = resolve_redirects(pages);
  EXPECT_TRUE(map.canonical.empty());
  EXPECT_GE(map.cyclic, 2u);
  EXPECT_GE(map.dead, 1u);
}

TEST(Redirects, ChainLongerThanCapIsDropped) {
  std::vector<TitleRecord> pages;
  for (int i = 0; i < 12; ++i) pages.push_back({"R" + std::to_string(i), "R" + std::to_string(i + 1)});
  pages.push_back({"R12", std::nullopt});
  const RedirectMap map = resolve_redirects(pages);
  EXPECT_EQ(map.canonical.at("R11"), "R12");
  EXPECT_EQ(map.canonical.at("R2"), "R12");  // exactly 10 hops
  EXPECT_FALSE(map.canonical.contains("R0"));
  EXPECT_GT(map.too_long, 0u);
}

TEST(DumpReader, YieldsPagesInOrder) {
  std::istringstream in(dump_xml(page_xml("Alpha", 0, "first &amp; text") + page_xml("Talk:Alpha", 1, "x") +
                                 page_xml("Beta", 0, "#REDIRECT [[Alpha]]")));
  DumpReader reader(in, 7);  // tiny chunks exercise buffer boundaries
  auto page = reader.next();
  ASSERT_TRUE(page);
  EXPECT_EQ(page->title, "Alpha");
  EXPECT_EQ(page->wikitext, "first & text");
  EXPECT_FALSE(page->is_redirect);
  page = reader.next();
  ASSERT_TRUE(page);
  EXPECT_EQ(page->namespace_id, 1);
  page = reader.next();
  ASSERT_TRUE(page);
  EXPECT_TRUE(page->is_redirect);
  EXPECT_EQ(page->redirect_target, "Alpha");
  EXPECT_FALSE(reader.next());
}

TEST(DumpReader, MalformedXmlThrowsWithOffset) {
  std::istringstream in("<mediawiki><page><title>A</title></pag></mediawiki>");
  DumpReader reader(in);
  try {
    while (reader.next()) {
    }
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.byte_offset(), 0u);
  }
}

TEST(RedirectDirective, ParsesCaseInsensitively) {
  EXPECT_EQ(parse_redirect_directive("#redirect [[united_Kingdom#History|x]]"), "United Kingdom");
  EXPECT_FALSE(parse_redirect_directive("A normal article"));
  EXPECT_EQ(normalize_title("  joe__biden "), "Joe biden");
}

TEST(Pipeline, FixtureDump) {
  const fs::path out = fresh_dir("ingest_fixture");
  std::ifstream dump(fs::path(ANCHORLINK_TEST_DATA) / "tiny_dump.xml");
  const IngestStats stats = ingest_dump(dump, out);
  EXPECT_EQ(stats.articles, 5u);
  EXPECT_EQ(stats.links, 11u);
  EXPECT_EQ(stats.redirects, 1u);
  EXPECT_EQ(stats.non_main_pages, 1u);
  EXPECT_EQ(stats.unresolved_links, 1u);

  const Dataset dataset = load_dataset(out);
  ASSERT_EQ(dataset.articles.size(), 5u);
  EXPECT_EQ(dataset.articles[0].title, "Joe Biden");
  EXPECT_EQ(dataset.articles[3].aliases, std::vector<std::string>{"US Senate"});
  EXPECT_EQ(dataset.network.edge_count(), 11u);
  // The redirect link "US Senate|Senate" from Delaware resolves to the Senate article.
  EXPECT_TRUE(dataset.network.has_edge(2, 3));
  // Every anchor occurs in its source abstract.
  for (const Edge& e : dataset.network.edges()) {
    for (const std::string& anchor : dataset.network.anchors(dataset.network.edge_index(e.source, e.target))) {
      EXPECT_NE(dataset.articles[e.source].abstract.find(anchor), std::string::npos) << anchor;
    }
  }
}

TEST(Pipeline, DeterministicOutput) {
  const fs::path a = fresh_dir("ingest_det_a");
  const fs::path b = fresh_dir("ingest_det_b");
  std::ifstream dump_a(fs::path(ANCHORLINK_TEST_DATA) / "tiny_dump.xml");
  std::ifstream dump_b(fs::path(ANCHORLINK_TEST_DATA) / "tiny_dump.xml");
  ingest_dump(dump_a, a);
  ingest_dump(dump_b, b);
  EXPECT_EQ(read_file(a / "articles.jsonl"), read_file(b / "articles.jsonl"));
  EXPECT_EQ(read_file(a / "links.tsv"), read_file(b / "links.tsv"));
}

TEST(Pipeline, EmptyMainspaceGivesEmptyOutputs) {
  const fs::path out = fresh_dir("ingest_empty");
  std::istringstream dump(dump_xml(page_xml("Talk:X", 1, "chatter")));
  const IngestStats stats = ingest_dump(dump, out);
  EXPECT_EQ(stats.articles, 0u);
  EXPECT_EQ(read_file(out / "articles.jsonl"), "");
  EXPECT_EQ(read_file(out / "links.tsv"), "");
}

TEST(Pipeline, SelfLinksAndPunctuationAnchorsAreDropped) {
  const fs::path out = fresh_dir("ingest_drop");
  std::istringstream dump(dump_xml(page_xml("Alpha", 0, "[[Alpha|itself]] and [[Beta|...]] and [[Beta]]") +
                                   page_xml("Beta", 0, "plain")));
  const IngestStats stats = ingest_dump(dump, out);
  EXPECT_EQ(stats.self_links, 1u);
  EXPECT_EQ(stats.unmatchable_anchors, 1u);
  EXPECT_EQ(stats.links, 1u);
}

TEST(Dataset, EscapedFieldsRoundTrip) {
  const std::string raw = "tab\there\nnew\\line\r";
  EXPECT_EQ(unescape_field(escape_field(raw)), raw);
  EXPECT_EQ(escape_field("a\tb"), "a\\tb");
}

TEST(Dataset, SaveLoadRoundTrip) {
  Dataset dataset;
  dataset.articles = {{0, "A", "alpha text", {"Aa"}}, {1, "B \"quoted\"", "beta\ttext", {}}};
  dataset.network = DocumentNetwork::Builder(2).add(0, 1, "beta").add(0, 1, "b\\x").add(1, 0, "alpha").build();
  const fs::path dir = fresh_dir("dataset_roundtrip");
  save_dataset(dir, dataset);
  const Dataset loaded = load_dataset(dir);
  ASSERT_EQ(loaded.articles.size(), 2u);
  EXPECT_EQ(loaded.articles[1].title, dataset.articles[1].title);
  EXPECT_EQ(loaded.articles[1].abstract, dataset.articles[1].abstract);
  EXPECT_EQ(loaded.articles[0].aliases, dataset.articles[0].aliases);
  EXPECT_EQ(network_links(loaded.network), network_links(dataset.network));
}

TEST(Dataset, NonContiguousIdsRejected) {
  const std::vector<Article> articles{{0, "A", "", {}}, {2, "B", "", {}}};
  EXPECT_THROW(validate_articles(articles), Error);
}

}  // namespace
}  // namespace anchorlink
