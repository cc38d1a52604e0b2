#include "anchorlink/eval/splits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "anchorlink/rng.hpp"

namespace anchorlink {
namespace {

void add_positives(std::vector<TestPair>& pairs, NodeId source, const std::vector<NodeId>& targets) {
  for (const NodeId t : targets) pairs.push_back(TestPair{source, t, true});
}

void finalize(std::vector<TestPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const TestPair& a, const TestPair& b) {
                            return a.source == b.source && a.target == b.target;
                          }),
              pairs.end());
}

}  // namespace

std::string_view eval_mode_name(EvalMode mode) {
  return mode == EvalMode::kTransductive ? "transductive" : "inductive";
}

std::size_t hidden_count(double ratio, std::size_t total) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw ArgumentError("split ratio must lie in (0, 1)");
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(total)));
}

std::vector<std::size_t> sample_indices(std::size_t total, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> items(total);
  std::iota(items.begin(), items.end(), std::size_t{0});
  Rng rng(seed);
  count = std::min(count, total);
  rng.shuffle_prefix(std::span<std::size_t>(items), count);
  items.resize(count);
  std::sort(items.begin(), items.end());
  return items;
}

EvalSplit split_transductive(const DocumentNetwork& network, const CandidateIndex& anchor_candidates,
                             double ratio, std::uint64_t run_seed) {
  EvalSplit split;
  split.mode = EvalMode::kTransductive;
  split.run_seed = run_seed;
  const std::size_t count = hidden_count(ratio, network.edge_count());
  for (const std::size_t index : sample_indices(network.edge_count(), count, run_seed)) {
    split.hidden_edges.push_back(network.edge(index));
  }
  split.train_network = network.without_edges(split.hidden_edges);

  // hidden_edges is sorted by source, so each source's hidden targets are contiguous.
  for (std::size_t i = 0; i < split.hidden_edges.size();) {
    const NodeId source = split.hidden_edges[i].source;
    std::vector<NodeId> hidden_targets;
    for (; i < split.hidden_edges.size() && split.hidden_edges[i].source == source; ++i) {
      hidden_targets.push_back(split.hidden_edges[i].target);
    }
    add_positives(split.test_pairs, source, hidden_targets);
    for (const auto& candidate : anchor_candidates.of(source)) {
      if (!network.has_edge(source, candidate.target)) {
        split.test_pairs.push_back(TestPair{source, candidate.target, false});
      }
    }
  }
  finalize(split.test_pairs);
  return split;
}

EvalSplit split_inductive(const DocumentNetwork& network, const CandidateIndex& anchor_candidates,
                          double ratio, std::uint64_t run_seed) {
  EvalSplit split;
  split.mode = EvalMode::kInductive;
  split.run_seed = run_seed;
  const std::size_t n = network.node_count();
  const std::size_t count = hidden_count(ratio, n);
  std::vector<bool> keep(n, true);
  for (const std::size_t index : sample_indices(n, count, run_seed)) {
    split.hidden_nodes.push_back(static_cast<NodeId>(index));
    keep[index] = false;
  }
  split.train_network = network.induced(keep);

  for (const NodeId hidden : split.hidden_nodes) {
    std::vector<NodeId> linked;
    for (const NodeId t : network.out_neighbors(hidden)) {
      if (keep[t]) linked.push_back(t);
    }
    add_positives(split.test_pairs, hidden, linked);
    for (const auto& candidate : anchor_candidates.of(hidden)) {
      if (keep[candidate.target] && !network.has_edge(hidden, candidate.target)) {
        split.test_pairs.push_back(TestPair{hidden, candidate.target, false});
      }
    }
  }
  finalize(split.test_pairs);
  return split;
}

void write_test_pairs(std::ostream& out, std::span<const TestPair> pairs) {
  for (const auto& pair : pairs) {
    out << pair.source << '\t' << pair.target << '\t' << (pair.label ? 1 : 0) << '\n';
  }
}

}  // namespace anchorlink
