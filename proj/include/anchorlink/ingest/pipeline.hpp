#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>

#include "anchorlink/ingest/wikitext.hpp"

namespace anchorlink {

struct IngestStats {
  std::uint64_t pages = 0;
  std::uint64_t skipped_pages = 0;
  std::uint64_t non_main_pages = 0;
  std::uint64_t redirects = 0;
  std::uint64_t articles = 0;
  std::uint64_t duplicate_titles = 0;
  std::uint64_t links = 0;
  std::uint64_t unresolved_links = 0;
  std::uint64_t self_links = 0;
  std::uint64_t unmatchable_anchors = 0;
  std::uint64_t dropped_redirects = 0;
  MarkupWarnings markup;
};

/// Streams a dump and writes articles.jsonl and links.tsv into `out_dir`.
/// Article ids follow dump order of non-redirect mainspace pages. Link
/// targets resolve through redirects; links to missing pages, self-links
/// and anchors without any word token are dropped and counted.
IngestStats ingest_dump(std::istream& dump, const std::filesystem::path& out_dir);

}  // namespace anchorlink
