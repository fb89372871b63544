#include "topogen/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace topogen {

EdgeOutcome Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) return EdgeOutcome::self_loop;
  const std::size_t n = adjacency_.size();
  if (u >= n || v >= n) throw std::out_of_range("unknown node identifier");
  if (!edge_keys_.insert(edge_key(u, v)).second) return EdgeOutcome::duplicate;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++link_count_;
  return EdgeOutcome::added;
}

std::uint64_t Graph::degree_sum() const {
  std::uint64_t sum = 0;
  for (const auto& list : adjacency_) sum += list.size();
  return sum;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(link_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (const NodeId v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

}  // namespace topogen
