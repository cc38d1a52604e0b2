#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "anchorlink/anchors/anchor_map.hpp"
#include "anchorlink/graph/network.hpp"

namespace anchorlink {

enum class EvalMode { kTransductive, kInductive };

std::string_view eval_mode_name(EvalMode mode);

struct TestPair {
  NodeId source = 0;
  NodeId target = 0;
  bool label = false;

  auto operator<=>(const TestPair&) const = default;
};

struct EvalSplit {
  EvalMode mode = EvalMode::kTransductive;
  DocumentNetwork train_network;
  std::vector<TestPair> test_pairs;   // ascending (source, target)
  std::vector<Edge> hidden_edges;     // transductive
  std::vector<NodeId> hidden_nodes;   // inductive
  std::uint64_t run_seed = 0;
};

/// round(ratio * total), halves rounded away from zero. Throws
/// ArgumentError unless 0 < ratio < 1.
std::size_t hidden_count(double ratio, std::size_t total);

/// Uniform sample of `count` items from `total` without replacement:
/// partial Fisher-Yates over 0..total-1 with Rng(seed), returned ascending.
std::vector<std::size_t> sample_indices(std::size_t total, std::size_t count, std::uint64_t seed);

/// Hides round(ratio * n_E) edges. Test pairs cover every source that lost an
/// edge: its hidden edges are positives, its anchor candidates that are not
/// edges of the full network are negatives.
EvalSplit split_transductive(const DocumentNetwork& network, const CandidateIndex& anchor_candidates,
                             double ratio, std::uint64_t run_seed);

/// Hides round(ratio * n_V) documents. The training network is the subgraph
/// induced by the remaining ones. Test pairs are each hidden document's
/// anchor candidates among retained documents, labeled by the full network.
EvalSplit split_inductive(const DocumentNetwork& network, const CandidateIndex& anchor_candidates,
                          double ratio, std::uint64_t run_seed);

/// test_pairs.tsv rows: source \t target \t label
void write_test_pairs(std::ostream& out, std::span<const TestPair> pairs);

}  // namespace anchorlink
