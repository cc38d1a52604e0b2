#include "anchorlink/eval/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace anchorlink {
namespace {

std::vector<ScoredPair> from_arrays(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw ArgumentError("scores and labels differ in length");
  std::vector<ScoredPair> pairs(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    // The index stands in for the pair identity so ties keep input order.
    pairs[i] = ScoredPair{static_cast<NodeId>(i >> 32), static_cast<NodeId>(i), scores[i], labels[i] != 0};
  }
  return pairs;
}

std::size_t count_positives(std::span<const ScoredPair> pairs) {
  const auto positives = static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const ScoredPair& p) { return p.label; }));
  if (positives == 0) throw UndefinedMetricError("metric undefined without positive pairs");
  return positives;
}

}  // namespace

std::vector<ScoredPair> rank_pairs(std::span<const ScoredPair> pairs) {
  std::vector<ScoredPair> ranked(pairs.begin(), pairs.end());
  for (const auto& p : ranked) {
    if (std::isnan(p.score)) throw ArgumentError("NaN score");
  }
  std::sort(ranked.begin(), ranked.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  return ranked;
}

double pr_auc(std::span<const ScoredPair> pairs) {
  const std::size_t positives = count_positives(pairs);
  const auto ranked = rank_pairs(pairs);
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
    if (!ranked[rank].label) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
  }
  return 100.0 * sum / static_cast<double>(positives);
}

double pr_auc(std::span<const double> scores, std::span<const int> labels) {
  return pr_auc(from_arrays(scores, labels));
}

PrecisionRecall precision_recall_at_prevalence(std::span<const ScoredPair> pairs, bool binary) {
  const std::size_t positives = count_positives(pairs);
  if (binary) {
    std::size_t predicted = 0;
    std::size_t true_positive = 0;
    for (const auto& p : pairs) {
      if (p.score < 0.5) continue;
      ++predicted;
      if (p.label) ++true_positive;
    }
    const double precision =
        predicted == 0 ? 0.0 : 100.0 * static_cast<double>(true_positive) / static_cast<double>(predicted);
    return {precision, 100.0 * static_cast<double>(true_positive) / static_cast<double>(positives)};
  }
  const auto ranked = rank_pairs(pairs);
  std::size_t true_positive = 0;
  for (std::size_t rank = 0; rank < positives; ++rank) {
    if (ranked[rank].label) ++true_positive;
  }
  const double value = 100.0 * static_cast<double>(true_positive) / static_cast<double>(positives);
  return {value, value};
}

PrecisionRecall precision_recall_at_prevalence(std::span<const double> scores,
                                               std::span<const int> labels, bool binary) {
  return precision_recall_at_prevalence(from_arrays(scores, labels), binary);
}

}  // namespace anchorlink
