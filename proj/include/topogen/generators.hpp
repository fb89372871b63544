#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "topogen/graph.hpp"
#include "topogen/rng.hpp"

namespace topogen {

enum class ModelKind { ba, glp, ig };

std::string_view to_string(ModelKind model);
std::optional<ModelKind> model_from_string(std::string_view name);

struct GeneratorConfig {
  ModelKind model = ModelKind::ba;
  std::size_t target_nodes = 0;
  std::size_t m0 = 10;  ///< seed graph size
  std::size_t m = 3;    ///< links per attachment / per link operation
  double rho = 0.0;     ///< glp: probability of a link-only step
  double beta = 0.0;    ///< glp: kernel offset, < 1
  double ig_branch_a_prob = 0.4;
  std::optional<std::uint64_t> target_links;  ///< glp: exact link top-up
  std::uint64_t seed = 0;

  void validate() const;  ///< throws ConfigError
};

/// Counters for the rare collision-handling paths; all zero on a clean run.
struct GenerationStats {
  std::uint64_t pair_redraws = 0;     ///< rejected endpoint pairs (self/duplicate)
  std::uint64_t links_skipped = 0;    ///< glp link given up after the redraw cap
  std::uint64_t peer_redraws = 0;     ///< ig peers rejected for host adjacency
  std::uint64_t peer_fallbacks = 0;   ///< ig peer link replaced by a plain preferential link
  std::uint64_t links_short = 0;      ///< ig step budget missed entirely
};

/// Which growth steps start a tracked node and how often degrees are
/// sampled. Steps count new-node insertions, starting at 1.
struct TraceSpec {
  std::vector<std::uint64_t> insertion_steps;
  std::uint64_t stride = 1;
};

struct GrowthTrace {
  struct TrackedNode {
    NodeId node;
    std::uint64_t inserted_at;
  };
  struct Sample {
    std::uint64_t step;
    NodeId node;
    std::uint64_t degree;
  };

  std::vector<TrackedNode> tracked;
  std::vector<Sample> samples;
};

/// Seed graphs: ba and glp start from a chain of m0 nodes (m0 - 1 links);
/// ig starts from a uniform random tree plus one extra link (m0 links,
/// connected).
Graph make_seed_graph(ModelKind model, std::size_t m0, Rng& rng);

Graph generate_ba(const GeneratorConfig& config, Rng& rng,
                  GenerationStats* stats = nullptr);
Graph generate_glp(const GeneratorConfig& config, Rng& rng,
                   GenerationStats* stats = nullptr);
Graph generate_ig(const GeneratorConfig& config, Rng& rng,
                  GenerationStats* stats = nullptr);

/// Dispatches on config.model.
Graph generate(const GeneratorConfig& config, Rng& rng,
               GenerationStats* stats = nullptr);

/// Same growth process as generate(); tracing observes degrees without
/// consuming random draws, so the returned graph is identical to the
/// untraced run for the same seed.
std::pair<Graph, GrowthTrace> generate_with_trace(const GeneratorConfig& config,
                                                  Rng& rng, const TraceSpec& spec,
                                                  GenerationStats* stats = nullptr);

}  // namespace topogen
