#include "anchorlink/graph/subgraph.hpp"

#include <algorithm>
#include <numeric>

namespace anchorlink {

Subgraph topk_subgraph(const DocumentNetwork& network, const PprScores& scores, std::size_t k,
                       std::span<const Article> articles) {
  const std::size_t n = network.node_count();
  if (k == 0) throw ArgumentError("k must be positive");
  if (k > n) throw ArgumentError("k exceeds the number of nodes");
  if (scores.scores.size() != n || articles.size() != n) {
    throw ArgumentError("scores and articles must cover every node");
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  const auto ranks_before = [&](NodeId a, NodeId b) {
    if (scores.scores[a] != scores.scores[b]) return scores.scores[a] > scores.scores[b];
    if (articles[a].title != articles[b].title) return articles[a].title < articles[b].title;
    return a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    ranks_before);

  Subgraph result;
  result.new_to_old.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  result.old_to_new.assign(n, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) result.old_to_new[result.new_to_old[i]] = static_cast<NodeId>(i);

  DocumentNetwork::Builder builder(k);
  for (std::size_t e = 0; e < network.edge_count(); ++e) {
    const Edge edge = network.edge(e);
    const auto s = result.old_to_new[edge.source];
    const auto t = result.old_to_new[edge.target];
    if (!s || !t) continue;
    for (const auto& anchor : network.anchors(e)) builder.add(*s, *t, anchor);
  }
  result.network = std::move(builder).build();
  return result;
}

Dataset extract_subgraph(const Dataset& dataset, const Subgraph& subgraph) {
  Dataset out;
  out.network = subgraph.network;
  out.articles.reserve(subgraph.new_to_old.size());
  for (std::size_t i = 0; i < subgraph.new_to_old.size(); ++i) {
    Article article = dataset.articles.at(subgraph.new_to_old[i]);
    article.id = static_cast<NodeId>(i);
    out.articles.push_back(std::move(article));
  }
  return out;
}

}  // namespace anchorlink
