#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "topogen/graph.hpp"
#include "topogen/rng.hpp"

namespace topogen {

/// Attachment weight of a node as a function of its degree: k under the
/// linear rule, k - beta under the shifted rule (beta < 1). Degree-zero
/// nodes always weigh zero.
struct PreferenceKernel {
  enum class Kind { linear, shifted_linear };

  Kind kind = Kind::linear;
  double beta = 0.0;

  static PreferenceKernel linear() { return {}; }
  static PreferenceKernel shifted_linear(double beta);

  double weight(std::size_t degree) const {
    if (degree == 0) return 0.0;
    const double offset = kind == Kind::shifted_linear ? beta : 0.0;
    const double w = static_cast<double>(degree) - offset;
    return w > 0.0 ? w : 0.0;
  }
};

/// Fenwick tree over per-node weights: point update, prefix search and
/// total in O(log n).
class CumulativeWeightIndex {
 public:
  void push_back(double weight);
  void add(std::size_t index, double delta);

  std::size_t size() const { return size_; }
  double total() const { return prefix(size_); }
  double weight(std::size_t index) const {
    return prefix(index + 1) - prefix(index);
  }

  /// Sum of the first `count` weights.
  double prefix(std::size_t count) const;

  /// 0-based index i with prefix(i) <= target < prefix(i+1); returns
  /// size() when target is at or beyond the total.
  std::size_t lower_bound(double target) const;

 private:
  std::vector<double> tree_;
  std::size_t size_ = 0;
};

/// Degree-proportional node sampler over a growing graph. The owner keeps
/// it in sync by calling on_node_added / on_degree_increment after each
/// graph mutation; draws then cost O(log n).
class PreferentialSampler {
 public:
  PreferentialSampler(const Graph& graph, PreferenceKernel kernel);

  void on_node_added() { index_.push_back(0.0); }

  /// The node's degree just changed from new_degree - 1 to new_degree.
  void on_degree_increment(NodeId node, std::size_t new_degree) {
    index_.add(node, kernel_.weight(new_degree) - kernel_.weight(new_degree - 1));
  }

  /// Draws a node with probability weight / total weight. Throws
  /// NoCandidateError when no node has positive weight.
  NodeId sample(Rng& rng) const;

  /// As sample(), but never returns a node from `excluded`. Rejection
  /// against the index with a bounded retry budget, then an exhaustive
  /// weighted scan of eligible nodes.
  NodeId sample_excluding(std::span<const NodeId> excluded, Rng& rng) const;

  double weight(NodeId node) const { return index_.weight(node); }
  double total_weight() const { return index_.total(); }
  const PreferenceKernel& kernel() const { return kernel_; }

 private:
  PreferenceKernel kernel_;
  CumulativeWeightIndex index_;
};

/// One-off preferential draw; builds a transient index in O(n). Generators
/// keep a PreferentialSampler instead.
NodeId sample_preferential(const Graph& graph, const PreferenceKernel& kernel,
                           std::span<const NodeId> excluded, Rng& rng);

}  // namespace topogen
