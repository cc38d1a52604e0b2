#include "anchorlink/dataset.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace anchorlink {
namespace {

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + file.string());
  return out;
}

NodeId parse_id(std::string_view field, std::size_t line_number) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("invalid node id '" + std::string(field) + "' on line " +
                         std::to_string(line_number),
                     0);
  }
  return value;
}

}  // namespace

std::string escape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case 't':
        out.push_back('\t');
        break;
      case 'n':
        out.push_back('\n');
        break;
      case 'r':
        out.push_back('\r');
        break;
      case '\\':
        out.push_back('\\');
        break;
      default:
        out.push_back('\\');
        out.push_back(text[i]);
    }
  }
  return out;
}

void write_article(std::ostream& out, const Article& article) {
  nlohmann::ordered_json row;
  row["id"] = article.id;
  row["title"] = article.title;
  row["abstract"] = article.abstract;
  row["aliases"] = article.aliases;
  out << row.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

void write_articles(std::ostream& out, std::span<const Article> articles) {
  for (const auto& article : articles) write_article(out, article);
}

std::vector<Article> read_articles(std::istream& in) {
  std::vector<Article> articles;
  std::string line;
  std::size_t line_number = 0;
  std::uint64_t offset = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::uint64_t line_offset = offset;
    offset += line.size() + 1;
    if (line.empty()) continue;
    try {
      const auto row = nlohmann::json::parse(line);
      Article article;
      article.id = row.at("id").get<NodeId>();
      article.title = row.at("title").get<std::string>();
      article.abstract = row.at("abstract").get<std::string>();
      if (row.contains("aliases")) article.aliases = row["aliases"].get<std::vector<std::string>>();
      articles.push_back(std::move(article));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("articles line " + std::to_string(line_number) + ": " + e.what(),
                       line_offset);
    }
  }
  return articles;
}

void write_link(std::ostream& out, const LinkRecord& link) {
  out << link.source << '\t' << link.target << '\t' << escape_field(link.anchor) << '\n';
}

std::vector<LinkRecord> read_links(std::istream& in) {
  std::vector<LinkRecord> links;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::size_t first = line.find('\t');
    const std::size_t second = first == std::string::npos ? first : line.find('\t', first + 1);
    if (second == std::string::npos) {
      throw ParseError("links line " + std::to_string(line_number) + ": expected 3 fields", 0);
    }
    const std::string_view view(line);
    links.push_back(LinkRecord{parse_id(view.substr(0, first), line_number),
                               parse_id(view.substr(first + 1, second - first - 1), line_number),
                               unescape_field(view.substr(second + 1))});
  }
  return links;
}

std::vector<LinkRecord> network_links(const DocumentNetwork& network) {
  std::vector<LinkRecord> links;
  for (std::size_t i = 0; i < network.edge_count(); ++i) {
    const Edge e = network.edge(i);
    for (const auto& anchor : network.anchors(i)) links.push_back({e.source, e.target, anchor});
  }
  return links;
}

DocumentNetwork build_network(std::size_t node_count, std::span<const LinkRecord> links) {
  DocumentNetwork::Builder builder(node_count);
  for (const auto& link : links) builder.add(link.source, link.target, link.anchor);
  return std::move(builder).build();
}

void validate_articles(std::span<const Article> articles) {
  std::unordered_set<std::string_view> titles;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    if (articles[i].id != i) {
      throw Error("article ids must be contiguous from 0; found id " +
                  std::to_string(articles[i].id) + " at position " + std::to_string(i));
    }
    if (!titles.insert(articles[i].title).second) {
      throw Error("duplicate article title: " + articles[i].title);
    }
  }
}

Dataset load_dataset(const std::filesystem::path& directory) {
  Dataset dataset;
  {
    auto in = open_input(directory / "articles.jsonl");
    dataset.articles = read_articles(in);
  }
  validate_articles(dataset.articles);
  auto in = open_input(directory / "links.tsv");
  const auto links = read_links(in);
  dataset.network = build_network(dataset.articles.size(), links);
  return dataset;
}

void save_dataset(const std::filesystem::path& directory, const Dataset& dataset) {
  std::filesystem::create_directories(directory);
  {
    auto out = open_output(directory / "articles.jsonl");
    write_articles(out, dataset.articles);
  }
  auto out = open_output(directory / "links.tsv");
  for (const auto& link : network_links(dataset.network)) write_link(out, link);
}

void write_remap(const std::filesystem::path& file, std::span<const NodeId> new_to_old) {
  auto out = open_output(file);
  for (std::size_t new_id = 0; new_id < new_to_old.size(); ++new_id) {
    out << new_to_old[new_id] << '\t' << new_id << '\n';
  }
}

}  // namespace anchorlink
