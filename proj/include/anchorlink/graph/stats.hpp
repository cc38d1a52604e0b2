#pragma once

#include <optional>
#include <span>
#include <vector>

#include "anchorlink/article.hpp"
#include "anchorlink/graph/network.hpp"

namespace anchorlink {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Population mean and standard deviation; {0, 0} for an empty input.
MeanStd mean_std(std::span<const double> values);

/// Per-document evaluation sample counts.
struct SampleCounts {
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

struct NetworkStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double density_percent = 0.0;
  std::size_t vocabulary = 0;
  MeanStd abstract_tokens;
  std::optional<MeanStd> positives;
  std::optional<MeanStd> negatives;
};

/// Dataset summary. Positive/negative sample statistics are averaged over
/// documents with at least one candidate.
NetworkStats network_stats(const DocumentNetwork& network, std::span<const Article> articles,
                           std::optional<std::span<const SampleCounts>> samples = std::nullopt);

}  // namespace anchorlink
