#include "anchorlink/ingest/redirects.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace anchorlink {

RedirectMap resolve_redirects(std::span<const TitleRecord> pages) {
  std::unordered_set<std::string_view> articles;
  std::unordered_map<std::string_view, std::string_view> next;
  for (const auto& page : pages) {
    if (!page.redirect_target) articles.insert(page.title);
  }
  for (const auto& page : pages) {
    if (page.redirect_target && !articles.contains(page.title)) {
      next.emplace(page.title, *page.redirect_target);
    }
  }

  RedirectMap result;
  std::vector<std::string_view> chain;
  for (const auto& [title, first] : next) {
    chain.assign({title});
    std::string_view current = first;
    bool resolved = false;
    for (int hop = 1;; ++hop) {
      if (articles.contains(current)) {
        resolved = true;
        break;
      }
      const auto it = next.find(current);
      if (it == next.end()) {
        ++result.dead;
        break;
      }
      if (std::find(chain.begin(), chain.end(), current) != chain.end()) {
        ++result.cyclic;
        break;
      }
      if (hop >= kMaxRedirectChain) {
        ++result.too_long;
        break;
      }
      chain.push_back(current);
      current = it->second;
    }
    if (resolved) result.canonical.emplace(std::string(title), std::string(current));
  }
  return result;
}

RedirectMap resolve_redirects(std::span<const RawPage> pages) {
  std::vector<TitleRecord> records;
  records.reserve(pages.size());
  for (const auto& page : pages) {
    if (page.namespace_id != 0) continue;
    records.push_back(TitleRecord{page.title, page.is_redirect ? page.redirect_target : std::nullopt});
  }
  return resolve_redirects(records);
}

}  // namespace anchorlink
