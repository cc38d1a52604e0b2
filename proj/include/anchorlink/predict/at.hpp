#pragma once

#include "anchorlink/anchors/anchor_map.hpp"

namespace anchorlink {

/// AT(title) / AT(anchor): true iff the source abstract contains, on token
/// boundaries, at least one string of `map` that points to `target`.
/// Throws ArgumentError when `target` is not below `article_count`.
bool predict_at(const AnchorMap& map, const Article& source, NodeId target, std::size_t article_count);

}  // namespace anchorlink
