#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "anchorlink/common.hpp"

namespace anchorlink {

/// Counts of recoverable markup problems met while cleaning wikitext.
struct MarkupWarnings {
  std::uint64_t unbalanced_templates = 0;
  std::uint64_t unclosed_comments = 0;
  std::uint64_t unclosed_refs = 0;
  std::uint64_t unclosed_links = 0;

  std::uint64_t total() const {
    return unbalanced_templates + unclosed_comments + unclosed_refs + unclosed_links;
  }
  MarkupWarnings& operator+=(const MarkupWarnings& other);
};

/// A wikilink as it appears in the rendered abstract. `begin`/`end` are byte
/// offsets into the plain-text abstract.
struct AnchorOccurrence {
  NodeId source = 0;
  std::string target_title;
  std::string anchor_text;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const AnchorOccurrence&) const = default;
};

/// Plain text of an abstract plus the wikilinks found in it.
struct LinkedText {
  std::string text;
  std::vector<AnchorOccurrence> links;
};

/// Lead section of a page: everything before the first "==" heading, with
/// templates, tables, comments, references, file/category links, external
/// link targets and bold/italic quotes removed. Wikilinks are kept for
/// extract_wikilinks. Whitespace is collapsed to single spaces.
std::string extract_abstract(std::string_view wikitext, MarkupWarnings* warnings = nullptr);

/// Renders wikilinks to their display text and records each main-namespace
/// link. Section suffixes ("#...") are cut from targets; links into other
/// namespaces render as text but produce no occurrence.
LinkedText render_wikilinks(std::string_view abstract_wikitext, NodeId source,
                            MarkupWarnings* warnings = nullptr);

inline std::vector<AnchorOccurrence> extract_wikilinks(std::string_view abstract_wikitext,
                                                       NodeId source,
                                                       MarkupWarnings* warnings = nullptr) {
  return render_wikilinks(abstract_wikitext, source, warnings).links;
}

/// True when `target` starts with a namespace or interwiki prefix
/// ("File:", "Category:", "fr:", ...).
bool has_namespace_prefix(std::string_view target);

}  // namespace anchorlink
