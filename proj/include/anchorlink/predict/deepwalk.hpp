#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anchorlink/graph/network.hpp"

namespace anchorlink {

struct DeepWalkOptions {
  int walks_per_node = 80;
  int walk_length = 40;
  int window = 10;
  int negatives = 10;
  int dimension = 512;
  double learning_rate = 0.025;
  /// Walk along edges in both directions; directed walks stop at sinks.
  bool undirected = true;
  std::uint64_t seed = 0;
};

/// Random walks starting `walks_per_node` times from every present node,
/// one shuffled pass over the nodes at a time. A walk ends early when the
/// current node has no neighbor.
std::vector<std::vector<NodeId>> generate_walks(const DocumentNetwork& network,
                                                const DeepWalkOptions& options);

class DeepWalkModel {
 public:
  DeepWalkModel(std::size_t node_count, int dimension, DeepWalkOptions options);

  int dimension() const { return dimension_; }
  std::size_t node_count() const { return trained_.size(); }
  const DeepWalkOptions& options() const { return options_; }
  bool contains(NodeId node) const { return node < trained_.size() && trained_[node]; }

  std::span<float> node_embedding(NodeId node) {
    return {node_.data() + static_cast<std::size_t>(node) * dimension_, static_cast<std::size_t>(dimension_)};
  }
  std::span<const float> node_embedding(NodeId node) const {
    return {node_.data() + static_cast<std::size_t>(node) * dimension_, static_cast<std::size_t>(dimension_)};
  }
  std::span<float> context_embedding(NodeId node) {
    return {context_.data() + static_cast<std::size_t>(node) * dimension_, static_cast<std::size_t>(dimension_)};
  }

 private:
  friend DeepWalkModel fit_deepwalk(const DocumentNetwork& network, const DeepWalkOptions& options);

  int dimension_;
  DeepWalkOptions options_;
  std::vector<float> node_;
  std::vector<float> context_;
  std::vector<bool> trained_;
};

/// Skip-gram with negative sampling over random walks: one epoch, learning
/// rate decaying linearly from options.learning_rate, negatives drawn from
/// the walk-frequency distribution raised to 0.75. Deterministic for a seed.
/// Throws ArgumentError for a network without present nodes.
DeepWalkModel fit_deepwalk(const DocumentNetwork& network, const DeepWalkOptions& options = {});

/// (1 + cosine) / 2 of the node embeddings. Throws UnsupportedModeError when
/// either node was not part of training (inductive use).
double score_deepwalk(const DeepWalkModel& model, NodeId source, NodeId target);

/// Loss -log s(u.v+) - sum log s(-u.v-) of one skip-gram example and its
/// gradient with respect to every vector involved.
struct SgnsGradient {
  double loss = 0.0;
  std::vector<double> center;
  std::vector<double> positive;
  std::vector<std::vector<double>> negatives;
};

SgnsGradient sgns_gradient(std::span<const double> center, std::span<const double> positive,
                           std::span<const std::span<const double>> negatives);

/// One SGD step on the same loss, updating the vectors in place. Output
/// vectors are updated with the pre-step center vector; `scratch` must hold
/// center.size() floats.
void sgns_step(std::span<float> center, std::span<float> positive,
               std::span<const std::span<float>> negatives, float learning_rate,
               std::span<float> scratch);

}  // namespace anchorlink
