#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "anchorlink/ingest/dump_reader.hpp"

namespace anchorlink {

/// Title of a mainspace page and, for redirects, where it points.
struct TitleRecord {
  std::string title;
  std::optional<std::string> redirect_target;
};

struct RedirectMap {
  /// redirect title -> canonical (non-redirect) article title
  std::map<std::string, std::string> canonical;
  std::uint64_t cyclic = 0;
  std::uint64_t dead = 0;
  std::uint64_t too_long = 0;
};

inline constexpr int kMaxRedirectChain = 10;

/// Follows redirect chains to a non-redirect page. Titles caught in a
/// cycle, chains longer than kMaxRedirectChain hops, and chains ending at a
/// missing page are dropped and counted.
RedirectMap resolve_redirects(std::span<const TitleRecord> pages);

RedirectMap resolve_redirects(std::span<const RawPage> pages);

}  // namespace anchorlink
