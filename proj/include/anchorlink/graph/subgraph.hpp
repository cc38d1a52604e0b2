#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anchorlink/article.hpp"
#include "anchorlink/dataset.hpp"
#include "anchorlink/graph/network.hpp"
#include "anchorlink/graph/pagerank.hpp"

namespace anchorlink {

struct Subgraph {
  DocumentNetwork network;
  /// new id -> old id, in rank order
  std::vector<NodeId> new_to_old;
  /// old id -> new id for retained nodes
  std::vector<std::optional<NodeId>> old_to_new;
};

/// The k highest-scored nodes (ties: ascending title, then id) and every
/// edge between them, relabeled 0..k-1 in rank order.
Subgraph topk_subgraph(const DocumentNetwork& network, const PprScores& scores, std::size_t k,
                       std::span<const Article> articles);

/// Applies a subgraph selection to a whole dataset: articles are relabeled
/// and keep their aliases.
Dataset extract_subgraph(const Dataset& dataset, const Subgraph& subgraph);

}  // namespace anchorlink
