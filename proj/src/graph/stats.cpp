#include "anchorlink/graph/stats.hpp"

#include <cmath>

#include "anchorlink/text/tfidf.hpp"
#include "anchorlink/text/tokenizer.hpp"

namespace anchorlink {

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (const double v : values) squares += (v - mean) * (v - mean);
  return {mean, std::sqrt(squares / static_cast<double>(values.size()))};
}

NetworkStats network_stats(const DocumentNetwork& network, std::span<const Article> articles,
                           std::optional<std::span<const SampleCounts>> samples) {
  NetworkStats stats;
  stats.nodes = network.node_count();
  stats.edges = network.edge_count();
  if (stats.nodes > 1) {
    const double pairs = static_cast<double>(stats.nodes) * static_cast<double>(stats.nodes - 1);
    stats.density_percent = 100.0 * static_cast<double>(stats.edges) / pairs;
  }

  std::vector<std::vector<std::string>> corpus;
  corpus.reserve(articles.size());
  std::vector<double> lengths;
  lengths.reserve(articles.size());
  for (const auto& article : articles) {
    corpus.push_back(tokenize(article.abstract));
    lengths.push_back(static_cast<double>(corpus.back().size()));
  }
  stats.vocabulary = Vocabulary::build(corpus).size();
  stats.abstract_tokens = mean_std(lengths);

  if (samples) {
    std::vector<double> positives;
    std::vector<double> negatives;
    for (const auto& counts : *samples) {
      if (counts.positives + counts.negatives == 0) continue;
      positives.push_back(static_cast<double>(counts.positives));
      negatives.push_back(static_cast<double>(counts.negatives));
    }
    stats.positives = mean_std(positives);
    stats.negatives = mean_std(negatives);
  }
  return stats;
}

}  // namespace anchorlink
