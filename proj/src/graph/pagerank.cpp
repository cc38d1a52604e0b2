#include "anchorlink/graph/pagerank.hpp"

#include <cmath>

namespace anchorlink {

PprScores personalized_pagerank(const DocumentNetwork& network, NodeId seed,
                                const PprOptions& options) {
  const std::size_t n = network.node_count();
  if (seed >= n) throw ArgumentError("seed " + std::to_string(seed) + " is not a node");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw ArgumentError("damping must lie in (0, 1)");
  }
  if (!(options.tolerance > 0.0)) throw ArgumentError("tolerance must be positive");

  PprScores result;
  result.seed = seed;
  result.damping = options.damping;
  std::vector<double> current(n, 0.0);
  std::vector<double> next(n, 0.0);
  current[seed] = 1.0;
  const double damping = options.damping;

  for (int iter = 0; iter < options.max_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    double to_seed = 1.0 - damping;
    for (NodeId u = 0; u < n; ++u) {
      const double mass = current[u];
      if (mass == 0.0) continue;
      const auto out = network.out_neighbors(u);
      if (out.empty()) {
        to_seed += damping * mass;
        continue;
      }
      const double share = damping * mass / static_cast<double>(out.size());
      for (const NodeId v : out) next[v] += share;
    }
    next[seed] += to_seed;
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) change += std::abs(next[v] - current[v]);
    current.swap(next);
    result.iterations = iter + 1;
    if (change < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  double total = 0.0;
  for (const double s : current) total += s;
  for (double& s : current) s /= total;
  result.scores = std::move(current);
  return result;
}

}  // namespace anchorlink
