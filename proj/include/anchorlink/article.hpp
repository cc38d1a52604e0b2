#pragma once

#include <string>
#include <vector>

#include "anchorlink/common.hpp"

namespace anchorlink {

/// A mainspace article after ingestion. `abstract` is plain text with all
/// markup removed; `aliases` are the redirect titles that resolve here.
struct Article {
  NodeId id = 0;
  std::string title;
  std::string abstract;
  std::vector<std::string> aliases;

  bool operator==(const Article&) const = default;
};

}  // namespace anchorlink
