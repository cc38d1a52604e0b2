#include "anchorlink/ingest/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "anchorlink/dataset.hpp"
#include "anchorlink/ingest/dump_reader.hpp"
#include "anchorlink/ingest/redirects.hpp"
#include "anchorlink/text/tokenizer.hpp"

namespace anchorlink {

IngestStats ingest_dump(std::istream& dump, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto staging_path = out_dir / ".ingest-staging.jsonl";
  IngestStats stats;
  std::vector<TitleRecord> titles;
  std::unordered_map<std::string, NodeId> article_ids;

  // Pass 1: stream pages, keep only titles in memory, stage article bodies.
  {
    std::ofstream staging(staging_path, std::ios::binary | std::ios::trunc);
    if (!staging) throw Error("cannot write " + staging_path.string());
    DumpReader reader(dump);
    while (auto page = reader.next()) {
      ++stats.pages;
      if (page->namespace_id != 0) {
        ++stats.non_main_pages;
        continue;
      }
      if (page->is_redirect) {
        ++stats.redirects;
        titles.push_back(TitleRecord{page->title, page->redirect_target});
        continue;
      }
      const auto id = static_cast<NodeId>(article_ids.size());
      if (!article_ids.emplace(page->title, id).second) {
        ++stats.duplicate_titles;
        continue;
      }
      titles.push_back(TitleRecord{page->title, std::nullopt});
      const std::string lead = extract_abstract(page->wikitext, &stats.markup);
      LinkedText rendered = render_wikilinks(lead, id, &stats.markup);
      nlohmann::json row;
      row["title"] = page->title;
      row["abstract"] = rendered.text;
      auto& links = row["links"] = nlohmann::json::array();
      for (const auto& link : rendered.links) links.push_back({link.target_title, link.anchor_text});
      staging << row.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
    stats.skipped_pages = reader.skipped_pages();
  }
  stats.articles = article_ids.size();

  const RedirectMap redirects = resolve_redirects(titles);
  stats.dropped_redirects = redirects.cyclic + redirects.dead + redirects.too_long;
  std::vector<std::vector<std::string>> aliases(article_ids.size());
  for (const auto& [alias, canonical] : redirects.canonical) {
    aliases[article_ids.at(canonical)].push_back(alias);
  }

  auto resolve = [&](const std::string& title) -> std::optional<NodeId> {
    if (auto it = article_ids.find(title); it != article_ids.end()) return it->second;
    if (auto it = redirects.canonical.find(title); it != redirects.canonical.end()) {
      return article_ids.at(it->second);
    }
    return std::nullopt;
  };

  // Pass 2: resolve link targets and write the dataset.
  {
    std::ifstream staging(staging_path, std::ios::binary);
    std::ofstream articles_out(out_dir / "articles.jsonl", std::ios::binary | std::ios::trunc);
    std::ofstream links_out(out_dir / "links.tsv", std::ios::binary | std::ios::trunc);
    if (!articles_out || !links_out) throw Error("cannot write dataset to " + out_dir.string());
    std::string line;
    NodeId id = 0;
    std::vector<LinkRecord> links;
    while (std::getline(staging, line)) {
      const auto row = nlohmann::json::parse(line);
      Article article{id, row["title"].get<std::string>(), row["abstract"].get<std::string>(),
                      std::move(aliases[id])};
      std::sort(article.aliases.begin(), article.aliases.end());
      write_article(articles_out, article);

      links.clear();
      for (const auto& link : row["links"]) {
        const auto target = resolve(link[0].get<std::string>());
        std::string anchor = link[1].get<std::string>();
        if (!target) {
          ++stats.unresolved_links;
        } else if (*target == id) {
          ++stats.self_links;
        } else if (tokenize(anchor).empty()) {
          ++stats.unmatchable_anchors;
        } else {
          links.push_back(LinkRecord{id, *target, std::move(anchor)});
        }
      }
      std::sort(links.begin(), links.end());
      for (const auto& link : links) write_link(links_out, link);
      stats.links += links.size();
      ++id;
    }
  }
  std::filesystem::remove(staging_path);
  return stats;
}

}  // namespace anchorlink
