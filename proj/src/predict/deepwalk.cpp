#include "anchorlink/predict/deepwalk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "anchorlink/rng.hpp"
#include "anchorlink/simd/kernels.hpp"

namespace anchorlink {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<std::vector<NodeId>> neighbor_lists(const DocumentNetwork& network, bool undirected) {
  std::vector<std::vector<NodeId>> neighbors(network.node_count());
  for (std::size_t e = 0; e < network.edge_count(); ++e) {
    const Edge edge = network.edge(e);
    neighbors[edge.source].push_back(edge.target);
    if (undirected) neighbors[edge.target].push_back(edge.source);
  }
  for (auto& list : neighbors) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return neighbors;
}

/// Cumulative unigram^0.75 weights for negative sampling.
class NegativeSampler {
 public:
  explicit NegativeSampler(const std::vector<std::vector<NodeId>>& walks, std::size_t node_count) {
    std::vector<double> counts(node_count, 0.0);
    for (const auto& walk : walks) {
      for (const NodeId node : walk) counts[node] += 1.0;
    }
    cumulative_.resize(node_count);
    double total = 0.0;
    for (std::size_t v = 0; v < node_count; ++v) {
      total += std::pow(counts[v], 0.75);
      cumulative_[v] = total;
    }
    total_ = total;
  }

  NodeId draw(Rng& rng) const {
    const double u = rng.uniform01() * total_;
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<NodeId>(std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1));
  }

 private:
  std::vector<double> cumulative_;
  double total_ = 0.0;
};

}  // namespace

std::vector<std::vector<NodeId>> generate_walks(const DocumentNetwork& network,
                                                const DeepWalkOptions& options) {
  const auto neighbors = neighbor_lists(network, options.undirected);
  std::vector<NodeId> starts;
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (network.contains(v)) starts.push_back(v);
  }
  Rng rng(splitmix64(options.seed ^ 0x5741'4c4bULL));
  std::vector<std::vector<NodeId>> walks;
  walks.reserve(starts.size() * static_cast<std::size_t>(options.walks_per_node));
  for (int pass = 0; pass < options.walks_per_node; ++pass) {
    rng.shuffle(std::span<NodeId>(starts));
    for (const NodeId start : starts) {
      std::vector<NodeId> walk{start};
      walk.reserve(static_cast<std::size_t>(options.walk_length));
      while (walk.size() < static_cast<std::size_t>(options.walk_length)) {
        const auto& next = neighbors[walk.back()];
        if (next.empty()) break;
        walk.push_back(next[rng.uniform_index(next.size())]);
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

DeepWalkModel::DeepWalkModel(std::size_t node_count, int dimension, DeepWalkOptions options)
    : dimension_(dimension),
      options_(options),
      node_(node_count * static_cast<std::size_t>(dimension), 0.0f),
      context_(node_count * static_cast<std::size_t>(dimension), 0.0f),
      trained_(node_count, false) {}

SgnsGradient sgns_gradient(std::span<const double> center, std::span<const double> positive,
                           std::span<const std::span<const double>> negatives) {
  const std::size_t d = center.size();
  SgnsGradient out;
  out.center.assign(d, 0.0);
  auto accumulate = [&](std::span<const double> output, double label, std::vector<double>& grad_output) {
    double f = 0.0;
    for (std::size_t i = 0; i < d; ++i) f += center[i] * output[i];
    const double s = sigmoid(f);
    out.loss -= label > 0.5 ? std::log(s) : std::log1p(-s);
    const double g = s - label;  // dL/df
    grad_output.assign(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      out.center[i] += g * output[i];
      grad_output[i] = g * center[i];
    }
  };
  accumulate(positive, 1.0, out.positive);
  out.negatives.resize(negatives.size());
  for (std::size_t k = 0; k < negatives.size(); ++k) accumulate(negatives[k], 0.0, out.negatives[k]);
  return out;
}

void sgns_step(std::span<float> center, std::span<float> positive,
               std::span<const std::span<float>> negatives, float learning_rate,
               std::span<float> scratch) {
  std::fill(scratch.begin(), scratch.end(), 0.0f);
  auto update = [&](std::span<float> output, float label) {
    const float f = simd::dot(std::span<const float>(center), std::span<const float>(output));
    const float g = (label - static_cast<float>(sigmoid(f))) * learning_rate;
    simd::axpy(g, std::span<const float>(output), scratch);
    simd::axpy(g, std::span<const float>(center), output);
  };
  update(positive, 1.0f);
  for (const auto& negative : negatives) update(negative, 0.0f);
  simd::axpy(1.0f, std::span<const float>(scratch), center);
}

DeepWalkModel fit_deepwalk(const DocumentNetwork& network, const DeepWalkOptions& options) {
  if (network.present_count() == 0) throw ArgumentError("DeepWalk needs a non-empty network");
  if (options.dimension < 1 || options.window < 1 || options.walk_length < 1 ||
      options.walks_per_node < 1 || options.negatives < 0) {
    throw ArgumentError("invalid DeepWalk hyperparameters");
  }
  const std::size_t n = network.node_count();
  const auto d = static_cast<std::size_t>(options.dimension);
  DeepWalkModel model(n, options.dimension, options);

  Rng rng(options.seed);
  for (NodeId v = 0; v < n; ++v) {
    model.trained_[v] = network.contains(v);
    for (float& x : model.node_embedding(v)) {
      x = static_cast<float>((rng.uniform01() - 0.5) / static_cast<double>(d));
    }
  }

  const auto walks = generate_walks(network, options);
  const NegativeSampler sampler(walks, n);
  std::size_t total = 0;
  for (const auto& walk : walks) total += walk.size();

  std::vector<float> scratch(d);
  std::vector<std::span<float>> negatives;
  negatives.reserve(static_cast<std::size_t>(options.negatives));
  std::size_t processed = 0;
  for (const auto& walk : walks) {
    for (std::size_t i = 0; i < walk.size(); ++i, ++processed) {
      const double progress = static_cast<double>(processed) / static_cast<double>(total);
      const auto lr = static_cast<float>(options.learning_rate * std::max(1e-4, 1.0 - progress));
      const auto reach = 1 + static_cast<std::size_t>(rng.uniform_index(static_cast<std::uint64_t>(options.window)));
      const std::size_t lo = i >= reach ? i - reach : 0;
      const std::size_t hi = std::min(walk.size() - 1, i + reach);
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j == i) continue;
        const NodeId context = walk[j];
        negatives.clear();
        for (int k = 0; k < options.negatives; ++k) {
          const NodeId sample = sampler.draw(rng);
          if (sample != context) negatives.push_back(model.context_embedding(sample));
        }
        sgns_step(model.node_embedding(walk[i]), model.context_embedding(context), negatives, lr,
                  scratch);
      }
    }
  }
  return model;
}

double score_deepwalk(const DeepWalkModel& model, NodeId source, NodeId target) {
  if (!model.contains(source) || !model.contains(target)) {
    throw UnsupportedModeError("DeepWalk cannot score nodes that were not in the training network");
  }
  const auto u = model.node_embedding(source);
  const auto v = model.node_embedding(target);
  const double uu = simd::squared_norm(u);
  const double vv = simd::squared_norm(v);
  if (uu == 0.0 || vv == 0.0) return 0.5;
  const double c = std::clamp(static_cast<double>(simd::dot(u, v)) / std::sqrt(uu * vv), -1.0, 1.0);
  return 0.5 * (1.0 + c);
}

}  // namespace anchorlink
