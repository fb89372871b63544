#include "topogen/preference.hpp"

#include <algorithm>
#include <bit>

#include "topogen/errors.hpp"

namespace topogen {

PreferenceKernel PreferenceKernel::shifted_linear(double beta) {
  if (!(beta < 1.0)) throw ConfigError("kernel offset beta must be smaller than 1");
  PreferenceKernel kernel;
  kernel.kind = Kind::shifted_linear;
  kernel.beta = beta;
  return kernel;
}

void CumulativeWeightIndex::push_back(double weight) {
  ++size_;
  const std::size_t i = size_;  // 1-based position
  const std::size_t low = i & (~i + 1);
  // tree_[i-1] spans the weights in (i - low, i]
  tree_.push_back(weight + prefix(i - 1) - prefix(i - low));
}

void CumulativeWeightIndex::add(std::size_t index, double delta) {
  for (std::size_t i = index + 1; i <= size_; i += i & (~i + 1)) {
    tree_[i - 1] += delta;
  }
}

double CumulativeWeightIndex::prefix(std::size_t count) const {
  double sum = 0.0;
  for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += tree_[i - 1];
  return sum;
}

std::size_t CumulativeWeightIndex::lower_bound(double target) const {
  std::size_t idx = 0;
  for (std::size_t mask = size_ ? std::bit_floor(size_) : 0; mask != 0;
       mask >>= 1) {
    const std::size_t next = idx + mask;
    if (next <= size_ && tree_[next - 1] <= target) {
      target -= tree_[next - 1];
      idx = next;
    }
  }
  return idx;
}

PreferentialSampler::PreferentialSampler(const Graph& graph,
                                         PreferenceKernel kernel)
    : kernel_(kernel) {
  for (NodeId node = 0; node < graph.node_count(); ++node) {
    index_.push_back(kernel_.weight(graph.degree(node)));
  }
}

NodeId PreferentialSampler::sample(Rng& rng) const {
  const double total = index_.total();
  if (!(total > 0.0)) {
    throw NoCandidateError("no node with positive attachment weight");
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t idx = index_.lower_bound(rng.uniform_unit() * total);
    if (idx < index_.size()) return static_cast<NodeId>(idx);
  }
  // rounding pushed the target to the total; take the last weighted node
  for (std::size_t i = index_.size(); i-- > 0;) {
    if (index_.weight(i) > 0.0) return static_cast<NodeId>(i);
  }
  throw NoCandidateError("no node with positive attachment weight");
}

NodeId PreferentialSampler::sample_excluding(std::span<const NodeId> excluded,
                                             Rng& rng) const {
  if (excluded.empty()) return sample(rng);
  const auto is_excluded = [&](NodeId id) {
    return std::find(excluded.begin(), excluded.end(), id) != excluded.end();
  };

  if (index_.total() > 0.0) {
    const std::size_t budget = 100 * excluded.size() + 100;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
      const NodeId id = sample(rng);
      if (!is_excluded(id)) return id;
    }
  }

  // exhaustive weighted scan over eligible nodes
  double eligible = 0.0;
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (!is_excluded(static_cast<NodeId>(i))) eligible += index_.weight(i);
  }
  if (!(eligible > 0.0)) {
    throw NoCandidateError("all weighted candidates excluded");
  }
  double target = rng.uniform_unit() * eligible;
  for (std::size_t i = 0; i < index_.size(); ++i) {
    const NodeId id = static_cast<NodeId>(i);
    if (is_excluded(id)) continue;
    const double w = index_.weight(i);
    if (w <= 0.0) continue;
    if (target < w) return id;
    target -= w;
  }
  for (std::size_t i = index_.size(); i-- > 0;) {
    const NodeId id = static_cast<NodeId>(i);
    if (!is_excluded(id) && index_.weight(i) > 0.0) return id;
  }
  throw NoCandidateError("all weighted candidates excluded");
}

NodeId sample_preferential(const Graph& graph, const PreferenceKernel& kernel,
                           std::span<const NodeId> excluded, Rng& rng) {
  const PreferentialSampler sampler(graph, kernel);
  return sampler.sample_excluding(excluded, rng);
}

}  // namespace topogen
