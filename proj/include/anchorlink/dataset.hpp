#pragma once

// On-disk dataset format shared by ingestion, subgraph export and
// evaluation:
//   articles.jsonl  {"id": int, "title": str, "abstract": str, "aliases": [str]}
//   links.tsv       source_id \t target_id \t anchor_text   (one row per anchor)
//   remap.tsv       old_id \t new_id                        (subgraph exports)

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anchorlink/article.hpp"
#include "anchorlink/graph/network.hpp"

namespace anchorlink {

struct LinkRecord {
  NodeId source = 0;
  NodeId target = 0;
  std::string anchor;

  auto operator<=>(const LinkRecord&) const = default;
};

struct Dataset {
  std::vector<Article> articles;
  DocumentNetwork network;
};

/// Escapes tab, newline, carriage return and backslash as \t, \n, \r, \\.
std::string escape_field(std::string_view text);
std::string unescape_field(std::string_view text);

void write_article(std::ostream& out, const Article& article);
void write_articles(std::ostream& out, std::span<const Article> articles);
std::vector<Article> read_articles(std::istream& in);

void write_link(std::ostream& out, const LinkRecord& link);
std::vector<LinkRecord> read_links(std::istream& in);

/// One row per anchor of every edge, in (source, target, anchor) order.
std::vector<LinkRecord> network_links(const DocumentNetwork& network);
DocumentNetwork build_network(std::size_t node_count, std::span<const LinkRecord> links);

/// Validates that ids are contiguous from 0 and titles are unique.
void validate_articles(std::span<const Article> articles);

Dataset load_dataset(const std::filesystem::path& directory);
void save_dataset(const std::filesystem::path& directory, const Dataset& dataset);

void write_remap(const std::filesystem::path& file, std::span<const NodeId> new_to_old);

}  // namespace anchorlink
