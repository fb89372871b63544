#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace topogen {

using NodeId = std::uint32_t;

enum class EdgeOutcome { added, duplicate, self_loop };

/// Undirected simple graph over dense node identifiers 0..N-1.
/// Neighbor lists keep insertion order; membership checks are O(1).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  /// Appends a node with degree 0 and returns its identifier (the old N).
  NodeId add_node() {
    adjacency_.emplace_back();
    return static_cast<NodeId>(adjacency_.size() - 1);
  }

  /// Inserts the undirected link {u, v}. Self-pairs and already-present
  /// pairs leave the graph unchanged and report the reason; unknown
  /// identifiers throw std::out_of_range.
  EdgeOutcome add_edge(NodeId u, NodeId v);

  bool has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    return edge_keys_.contains(edge_key(u, v));
  }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t link_count() const { return link_count_; }
  std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    const auto& list = adjacency_.at(u);
    return {list.data(), list.size()};
  }

  std::uint64_t degree_sum() const;
  std::size_t max_degree() const;

  /// All links as (u, v) pairs with u < v, in unspecified order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  static std::uint64_t edge_key(NodeId u, NodeId v) {
    const std::uint64_t lo = u < v ? u : v;
    const std::uint64_t hi = u < v ? v : u;
    return (lo << 32) | hi;
  }

  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::size_t link_count_ = 0;
};

}  // namespace topogen
