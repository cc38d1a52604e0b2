#pragma once

#include <cstddef>
#include <vector>

#include "anchorlink/graph/network.hpp"

namespace anchorlink {

struct PprOptions {
  double damping = 0.85;
  double tolerance = 1e-10;
  int max_iters = 200;
};

struct PprScores {
  NodeId seed = 0;
  double damping = 0.85;
  std::vector<double> scores;
  int iterations = 0;
  bool converged = false;
};

/// Personalized PageRank by power iteration on the out-link transition
/// matrix. Each step restarts at the seed with probability 1 - damping and
/// sends the mass of dangling nodes back to the seed. Stops when the L1
/// change drops below the tolerance or after max_iters (then
/// converged == false).
PprScores personalized_pagerank(const DocumentNetwork& network, NodeId seed,
                                const PprOptions& options = {});

}  // namespace anchorlink
