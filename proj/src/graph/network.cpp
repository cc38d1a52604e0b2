#include "anchorlink/graph/network.hpp"

#include <algorithm>

namespace anchorlink {

DocumentNetwork::Builder& DocumentNetwork::Builder::add(NodeId source, NodeId target,
                                                        std::string anchor) {
  if (source >= node_count_ || target >= node_count_) {
    throw ArgumentError("edge endpoint out of range: " + std::to_string(source) + " -> " +
                        std::to_string(target));
  }
  if (anchor.empty()) throw ArgumentError("edge anchor must be non-empty");
  if (source == target) return *this;
  links_.push_back(Link{Edge{source, target}, std::move(anchor)});
  return *this;
}

DocumentNetwork DocumentNetwork::Builder::build() {
  std::sort(links_.begin(), links_.end(), [](const Link& a, const Link& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.anchor < b.anchor;
  });
  DocumentNetwork network;
  network.offsets_.assign(node_count_ + 1, 0);
  network.present_.assign(node_count_, true);
  for (auto& link : links_) {
    if (network.targets_.empty() || network.sources_.back() != link.edge.source ||
        network.targets_.back() != link.edge.target) {
      network.sources_.push_back(link.edge.source);
      network.targets_.push_back(link.edge.target);
      network.anchors_.emplace_back();
      ++network.offsets_[link.edge.source + 1];
    }
    network.anchors_.back().push_back(std::move(link.anchor));
  }
  for (std::size_t i = 1; i < network.offsets_.size(); ++i) {
    network.offsets_[i] += network.offsets_[i - 1];
  }
  links_.clear();
  return network;
}

std::span<const NodeId> DocumentNetwork::out_neighbors(NodeId node) const {
  return std::span<const NodeId>(targets_).subspan(offsets_[node],
                                                   offsets_[node + 1] - offsets_[node]);
}

std::size_t DocumentNetwork::edge_index(NodeId source, NodeId target) const {
  if (source >= node_count()) return edge_count();
  const auto row = out_neighbors(source);
  const auto it = std::lower_bound(row.begin(), row.end(), target);
  if (it == row.end() || *it != target) return edge_count();
  return offsets_[source] + static_cast<std::size_t>(it - row.begin());
}

bool DocumentNetwork::has_edge(NodeId source, NodeId target) const {
  return edge_index(source, target) != edge_count();
}

Edge DocumentNetwork::edge(std::size_t index) const { return Edge{sources_[index], targets_[index]}; }

std::vector<Edge> DocumentNetwork::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < edge_count(); ++i) out.push_back(edge(i));
  return out;
}

std::size_t DocumentNetwork::present_count() const {
  return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), true));
}

namespace {

template <typename Keep>
DocumentNetwork filter_edges(const std::vector<std::size_t>& offsets,
                             const std::vector<NodeId>& sources, const std::vector<NodeId>& targets,
                             const std::vector<std::vector<std::string>>& anchors, Keep keep) {
  DocumentNetwork::Builder builder(offsets.size() - 1);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!keep(i)) continue;
    for (const auto& anchor : anchors[i]) builder.add(sources[i], targets[i], anchor);
  }
  return std::move(builder).build();
}

}  // namespace

DocumentNetwork DocumentNetwork::without_edges(std::span<const Edge> removed) const {
  std::vector<bool> drop(edge_count(), false);
  for (const Edge& e : removed) {
    const std::size_t index = edge_index(e.source, e.target);
    if (index == edge_count()) throw ArgumentError("cannot remove a missing edge");
    drop[index] = true;
  }
  DocumentNetwork out =
      filter_edges(offsets_, sources_, targets_, anchors_, [&](std::size_t i) { return !drop[i]; });
  out.present_ = present_;
  return out;
}

DocumentNetwork DocumentNetwork::induced(const std::vector<bool>& keep) const {
  if (keep.size() != node_count()) throw ArgumentError("node mask size mismatch");
  std::vector<bool> present(node_count());
  for (std::size_t v = 0; v < node_count(); ++v) present[v] = keep[v] && present_[v];
  DocumentNetwork out = filter_edges(offsets_, sources_, targets_, anchors_, [&](std::size_t i) {
    return present[sources_[i]] && present[targets_[i]];
  });
  out.present_ = std::move(present);
  return out;
}

}  // namespace anchorlink
