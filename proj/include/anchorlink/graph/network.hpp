#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "anchorlink/common.hpp"

namespace anchorlink {

struct Edge {
  NodeId source = 0;
  NodeId target = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Directed, unweighted hyperlink network. Each edge carries the multiset
/// of anchor strings that realize it (sorted). Edges are stored in
/// compressed rows ordered by (source, target).
///
/// A network may mark some node ids as absent: they keep their id but have
/// no edges and are excluded from training (used for held-out documents).
class DocumentNetwork {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t node_count) : node_count_(node_count) {}

    /// Adds one anchored link. Self-loops are ignored; repeated
    /// (source, target) pairs merge into one edge. Throws ArgumentError for
    /// out-of-range endpoints or an empty anchor.
    Builder& add(NodeId source, NodeId target, std::string anchor);

    /// Consumes the collected links.
    DocumentNetwork build();

   private:
    struct Link {
      Edge edge;
      std::string anchor;
    };
    std::size_t node_count_;
    std::vector<Link> links_;
  };

  DocumentNetwork() = default;

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size(); }

  /// Out-neighbors of `node`, ascending.
  std::span<const NodeId> out_neighbors(NodeId node) const;
  std::size_t out_degree(NodeId node) const { return out_neighbors(node).size(); }

  bool has_edge(NodeId source, NodeId target) const;

  /// Index of the edge in [0, edge_count()), or edge_count() when absent.
  std::size_t edge_index(NodeId source, NodeId target) const;

  Edge edge(std::size_t index) const;
  std::vector<Edge> edges() const;

  const std::vector<std::string>& anchors(std::size_t edge_index) const {
    return anchors_[edge_index];
  }

  bool contains(NodeId node) const { return node < present_.size() && present_[node]; }
  std::size_t present_count() const;

  /// Copy without the given edges (which must exist).
  DocumentNetwork without_edges(std::span<const Edge> removed) const;

  /// Same id space, with only nodes where keep[node] is true present and
  /// only edges between present nodes retained.
  DocumentNetwork induced(const std::vector<bool>& keep) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> targets_;
  std::vector<std::vector<std::string>> anchors_;
  std::vector<bool> present_;
};

}  // namespace anchorlink
