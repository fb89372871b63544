#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "topogen/errors.hpp"
#include "topogen/graph.hpp"
#include "topogen/preference.hpp"
#include "topogen/rng.hpp"

using namespace topogen;

namespace {

/// Fixed graph with degrees [1, 1, 2]: path 0 - 2 - 1.
Graph small_path() {
  Graph g(3);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  return g;
}

std::vector<double> empirical_frequencies(const Graph& g,
                                          const PreferenceKernel& kernel,
                                          std::size_t draws,
                                          std::uint64_t seed) {
  const PreferentialSampler sampler(g, kernel);
  Rng rng(seed);
  std::vector<std::size_t> hits(g.node_count(), 0);
  for (std::size_t i = 0; i < draws; ++i) {
    ++hits[sampler.sample(rng)];
  }
  std::vector<double> freq(g.node_count());
  for (std::size_t i = 0; i < freq.size(); ++i) {
    freq[i] = static_cast<double>(hits[i]) / static_cast<double>(draws);
  }
  return freq;
}

}  // namespace

TEST_CASE("kernel weights") {
  const PreferenceKernel linear = PreferenceKernel::linear();
  CHECK(linear.weight(0) == 0.0);
  CHECK(linear.weight(1) == 1.0);
  CHECK(linear.weight(7) == 7.0);

  const PreferenceKernel shifted = PreferenceKernel::shifted_linear(0.5);
  CHECK(shifted.weight(0) == 0.0);
  CHECK(shifted.weight(1) == doctest::Approx(0.5));
  CHECK(shifted.weight(3) == doctest::Approx(2.5));

  // negative offsets raise weights but degree 0 stays at zero
  const PreferenceKernel negative = PreferenceKernel::shifted_linear(-0.5);
  CHECK(negative.weight(0) == 0.0);
  CHECK(negative.weight(1) == doctest::Approx(1.5));

  CHECK_THROWS_AS(PreferenceKernel::shifted_linear(1.0), ConfigError);
  CHECK_THROWS_AS(PreferenceKernel::shifted_linear(2.5), ConfigError);

  for (std::size_t k = 0; k <= 10; ++k) {
    CHECK(PreferenceKernel::shifted_linear(0.0).weight(k) ==
          PreferenceKernel::linear().weight(k));
  }
}

TEST_CASE("cumulative index matches a linear-scan oracle on integer weights") {
  Rng rng(99);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng.uniform_index(64);
    std::vector<double> weights(n);
    CumulativeWeightIndex index;
    for (auto& w : weights) {
      w = static_cast<double>(rng.uniform_index(10));
      index.push_back(w);
    }
    // a few point updates, integer deltas
    for (int u = 0; u < 8; ++u) {
      const std::size_t at = rng.uniform_index(n);
      const double delta = static_cast<double>(rng.uniform_index(5));
      weights[at] += delta;
      index.add(at, delta);
    }
    double total = 0.0;
    for (const double w : weights) total += w;
    REQUIRE(index.total() == total);

    for (std::size_t i = 0; i < n; ++i) {
      CHECK(index.weight(i) == weights[i]);
    }
    const auto max_target = static_cast<std::uint64_t>(total);
    for (std::uint64_t t = 0; t < max_target; ++t) {
      // oracle: smallest i whose cumulative weight exceeds t
      double cumulative = 0.0;
      std::size_t expected = n;
      for (std::size_t i = 0; i < n; ++i) {
        cumulative += weights[i];
        if (cumulative > static_cast<double>(t)) {
          expected = i;
          break;
        }
      }
      CHECK(index.lower_bound(static_cast<double>(t)) == expected);
    }
    CHECK(index.lower_bound(total) == n);
  }
}

TEST_CASE("sampling frequencies follow the kernel weights") {
  constexpr std::size_t kDraws = 1'000'000;

  SUBCASE("linear kernel on degrees [1, 1, 2]") {
    const Graph g = small_path();
    const auto freq =
        empirical_frequencies(g, PreferenceKernel::linear(), kDraws, 7);
    const std::array<double, 3> expected{0.25, 0.25, 0.5};
    for (std::size_t i = 0; i < 3; ++i) {
      const double sigma =
          std::sqrt(expected[i] * (1 - expected[i]) / kDraws);
      CHECK(std::abs(freq[i] - expected[i]) < 4 * sigma);
    }
  }

  SUBCASE("shifted kernel, beta 0.5, degrees [1, 3]") {
    // weights [0.5, 2.5] -> probabilities [1/6, 5/6]
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    // restrict to nodes 0 and 1 by excluding the rest
    const PreferentialSampler sampler(g, PreferenceKernel::shifted_linear(0.5));
    const std::array<NodeId, 3> excluded{2, 3, 4};
    Rng rng(11);
    constexpr std::size_t kShiftDraws = 200'000;
    std::size_t hits0 = 0;
    for (std::size_t i = 0; i < kShiftDraws; ++i) {
      if (sampler.sample_excluding(excluded, rng) == 0) ++hits0;
    }
    const double p0 = 1.0 / 6.0;
    const double sigma = std::sqrt(p0 * (1 - p0) / kShiftDraws);
    CHECK(std::abs(static_cast<double>(hits0) / kShiftDraws - p0) < 3 * sigma);
  }

  SUBCASE("ten-node graph, both kernels, 4 sigma") {
    Graph g = testing::star_graph(6);  // hub degree 5
    g.add_node();                      // 6
    g.add_node();                      // 7
    g.add_node();                      // 8
    g.add_node();                      // 9, isolated
    g.add_edge(6, 7);
    g.add_edge(7, 8);
    g.add_edge(1, 6);
    // degrees: [5,2,1,1,1,1,2,2,1,0]
    for (const PreferenceKernel& kernel :
         {PreferenceKernel::linear(), PreferenceKernel::shifted_linear(0.6447)}) {
      double total = 0.0;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        total += kernel.weight(g.degree(v));
      }
      const auto freq = empirical_frequencies(g, kernel, kDraws, 13);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const double p = kernel.weight(g.degree(v)) / total;
        const double sigma = std::sqrt(p * (1 - p) / kDraws);
        CHECK(std::abs(freq[v] - p) <= 4 * sigma);
      }
      // degree-zero node is never drawn
      CHECK(freq[9] == 0.0);
    }
  }
}

TEST_CASE("exclusion is absolute") {
  Graph g = testing::complete_graph(10);
  const PreferentialSampler sampler(g, PreferenceKernel::linear());
  const std::array<NodeId, 2> excluded{2, 5};
  Rng rng(21);
  for (std::size_t i = 0; i < 100'000; ++i) {
    const NodeId picked = sampler.sample_excluding(excluded, rng);
    REQUIRE(picked != 2);
    REQUIRE(picked != 5);
  }
}

TEST_CASE("no candidate cases") {
  Graph isolated(4);  // all degree zero
  const PreferentialSampler sampler(isolated, PreferenceKernel::linear());
  Rng rng(3);
  CHECK_THROWS_AS(sampler.sample(rng), NoCandidateError);

  Graph pair(2);
  pair.add_edge(0, 1);
  const PreferentialSampler pair_sampler(pair, PreferenceKernel::linear());
  const std::array<NodeId, 2> both{0, 1};
  CHECK_THROWS_AS(pair_sampler.sample_excluding(both, rng), NoCandidateError);

  // positive weight exists outside the exclusion set
  const std::array<NodeId, 1> one{0};
  CHECK(pair_sampler.sample_excluding(one, rng) == 1);
}

TEST_CASE("shifted kernel with beta 0 draws identically to linear") {
  Graph g = testing::random_graph(40, 0.15, 5);
  const PreferentialSampler linear(g, PreferenceKernel::linear());
  const PreferentialSampler shifted(g, PreferenceKernel::shifted_linear(0.0));
  Rng rng_a(17);
  Rng rng_b(17);
  for (int i = 0; i < 10'000; ++i) {
    CHECK(linear.sample(rng_a) == shifted.sample(rng_b));
  }
}

TEST_CASE("incremental updates track a freshly built index") {
  Graph g = testing::path_graph(6);
  PreferentialSampler incremental(g, PreferenceKernel::shifted_linear(0.6447));
  Rng rng(31);
  for (int step = 0; step < 200; ++step) {
    if (step % 3 == 0) {
      const NodeId node = g.add_node();
      incremental.on_node_added();
      const NodeId target = static_cast<NodeId>(rng.uniform_index(node));
      if (g.add_edge(node, target) == EdgeOutcome::added) {
        incremental.on_degree_increment(node, g.degree(node));
        incremental.on_degree_increment(target, g.degree(target));
      }
    } else {
      const NodeId u = static_cast<NodeId>(rng.uniform_index(g.node_count()));
      const NodeId v = static_cast<NodeId>(rng.uniform_index(g.node_count()));
      if (u != v && g.add_edge(u, v) == EdgeOutcome::added) {
        incremental.on_degree_increment(u, g.degree(u));
        incremental.on_degree_increment(v, g.degree(v));
      }
    }
  }
  const PreferentialSampler rebuilt(g, PreferenceKernel::shifted_linear(0.6447));
  CHECK(incremental.total_weight() ==
        doctest::Approx(rebuilt.total_weight()).epsilon(1e-12));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    CHECK(incremental.weight(v) ==
          doctest::Approx(rebuilt.weight(v)).epsilon(1e-12));
  }
}

TEST_CASE("identical seeds give identical draw sequences") {
  const Graph g = testing::random_graph(30, 0.2, 77);
  const PreferentialSampler sampler(g, PreferenceKernel::linear());
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 5000; ++i) {
    REQUIRE(sampler.sample(a) == sampler.sample(b));
  }
}

TEST_CASE("one-off sample_preferential agrees with a persistent sampler") {
  const Graph g = small_path();
  Rng a(9);
  Rng b(9);
  const PreferentialSampler sampler(g, PreferenceKernel::linear());
  const std::array<NodeId, 1> excluded{2};
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_preferential(g, PreferenceKernel::linear(), excluded, a) ==
          sampler.sample_excluding(excluded, b));
  }
}
