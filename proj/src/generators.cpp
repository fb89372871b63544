#include "topogen/generators.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <optional>
#include <queue>
#include <string>

#include "topogen/errors.hpp"
#include "topogen/preference.hpp"

namespace topogen {

namespace {

constexpr int kPairRedrawCap = 1000;

/// Observes growth steps and records tracked-node degrees; consumes no
/// random draws.
class TraceRecorder {
 public:
  TraceRecorder(const TraceSpec& spec, GrowthTrace& out)
      : out_(out),
        stride_(spec.stride == 0 ? 1 : spec.stride),
        wanted_(spec.insertion_steps) {
    std::sort(wanted_.begin(), wanted_.end());
    wanted_.erase(std::unique(wanted_.begin(), wanted_.end()), wanted_.end());
  }

  void on_growth_step(std::uint64_t step, NodeId new_node, const Graph& g) {
    bool record = (step % stride_) == 0;
    if (std::binary_search(wanted_.begin(), wanted_.end(), step)) {
      out_.tracked.push_back({new_node, step});
      record = true;
    }
    if (!record) return;
    for (const auto& tracked : out_.tracked) {
      out_.samples.push_back({step, tracked.node, g.degree(tracked.node)});
    }
  }

 private:
  GrowthTrace& out_;
  std::uint64_t stride_;
  std::vector<std::uint64_t> wanted_;
};

void attach(Graph& g, PreferentialSampler& sampler, NodeId u, NodeId v) {
  const EdgeOutcome outcome = g.add_edge(u, v);
  assert(outcome == EdgeOutcome::added);
  (void)outcome;
  sampler.on_degree_increment(u, g.degree(u));
  sampler.on_degree_increment(v, g.degree(v));
}

/// One link between a preferentially drawn pair; the pair is redrawn while
/// it is a self-pair or an existing link, up to the cap.
bool add_preferential_link(Graph& g, PreferentialSampler& sampler, Rng& rng,
                           GenerationStats* stats) {
  for (int attempt = 0; attempt < kPairRedrawCap; ++attempt) {
    const NodeId u = sampler.sample(rng);
    const NodeId v = sampler.sample(rng);
    if (u == v || g.has_edge(u, v)) {
      if (stats) ++stats->pair_redraws;
      continue;
    }
    attach(g, sampler, u, v);
    return true;
  }
  return false;
}

std::vector<NodeId> pick_distinct(const PreferentialSampler& sampler,
                                  std::size_t count, Rng& rng) {
  std::vector<NodeId> chosen;
  chosen.reserve(count);
  while (chosen.size() < count) {
    chosen.push_back(sampler.sample_excluding(chosen, rng));
  }
  return chosen;
}

/// Uniform random labeled tree on n nodes (Pruefer decode).
Graph random_tree(std::size_t n, Rng& rng) {
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<NodeId> seq(n - 2);
  for (auto& s : seq) s = static_cast<NodeId>(rng.uniform_index(n));
  std::vector<std::uint32_t> child_count(n, 0);
  for (const NodeId s : seq) ++child_count[s];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId i = 0; i < n; ++i) {
    if (child_count[i] == 0) leaves.push(i);
  }
  for (const NodeId s : seq) {
    const NodeId leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, s);
    if (--child_count[s] == 0) leaves.push(s);
  }
  const NodeId a = leaves.top();
  leaves.pop();
  const NodeId b = leaves.top();
  g.add_edge(a, b);
  return g;
}

Graph generate_ba_impl(const GeneratorConfig& cfg, Rng& rng,
                       GenerationStats* stats, TraceRecorder* trace) {
  (void)stats;
  cfg.validate();
  if (cfg.m > cfg.m0) throw ConfigError("ba: m must not exceed m0");
  Graph g = make_seed_graph(ModelKind::ba, cfg.m0, rng);
  PreferentialSampler sampler(g, PreferenceKernel::linear());
  std::uint64_t step = 0;
  while (g.node_count() < cfg.target_nodes) {
    const auto targets = pick_distinct(sampler, cfg.m, rng);
    const NodeId node = g.add_node();
    sampler.on_node_added();
    for (const NodeId target : targets) attach(g, sampler, node, target);
    ++step;
    if (trace) trace->on_growth_step(step, node, g);
  }
  return g;
}

Graph generate_glp_impl(const GeneratorConfig& cfg, Rng& rng,
                        GenerationStats* stats, TraceRecorder* trace) {
  cfg.validate();
  if (cfg.m >= cfg.m0) throw ConfigError("glp: m must be smaller than m0");
  if (cfg.rho >= 1.0 && cfg.target_nodes > cfg.m0) {
    throw ConfigError("glp: rho = 1 never adds nodes");
  }
  Graph g = make_seed_graph(ModelKind::glp, cfg.m0, rng);
  PreferentialSampler sampler(g, PreferenceKernel::shifted_linear(cfg.beta));
  std::uint64_t step = 0;
  while (g.node_count() < cfg.target_nodes) {
    if (rng.bernoulli(cfg.rho)) {
      for (std::size_t j = 0; j < cfg.m; ++j) {
        if (!add_preferential_link(g, sampler, rng, stats) && stats) {
          ++stats->links_skipped;
        }
      }
    } else {
      const auto targets = pick_distinct(sampler, cfg.m, rng);
      const NodeId node = g.add_node();
      sampler.on_node_added();
      for (const NodeId target : targets) attach(g, sampler, node, target);
      ++step;
      if (trace) trace->on_growth_step(step, node, g);
    }
  }
  if (cfg.target_links) {
    if (g.link_count() > *cfg.target_links) {
      throw UnreachableTargetError(
          "glp: " + std::to_string(g.link_count()) +
          " links at node target already exceed target_links " +
          std::to_string(*cfg.target_links));
    }
    while (g.link_count() < *cfg.target_links) {
      if (!add_preferential_link(g, sampler, rng, stats)) {
        throw UnreachableTargetError("glp: no further links can be placed");
      }
    }
  }
  return g;
}

/// Peer draw for one ig host: preferential, excluding the listed nodes and
/// anything already adjacent to the host; redrawn up to the cap.
std::optional<NodeId> draw_eligible_peer(const Graph& g,
                                         const PreferentialSampler& sampler,
                                         Rng& rng, NodeId host,
                                         std::span<const NodeId> excluded,
                                         GenerationStats* stats) {
  for (int attempt = 0; attempt < kPairRedrawCap; ++attempt) {
    const NodeId peer = sampler.sample_excluding(excluded, rng);
    if (!g.has_edge(host, peer)) return peer;
    if (stats) ++stats->peer_redraws;
  }
  return std::nullopt;
}

/// Replacement for a peer link that could not be placed: one plain
/// preferential link between two eligible nodes, keeping the 3-links-per-
/// step budget. At tiny sizes even this can fail; the step then stays
/// short and the shortfall is counted.
void make_up_link(Graph& g, PreferentialSampler& sampler, Rng& rng,
                  GenerationStats* stats) {
  if (stats) ++stats->peer_fallbacks;
  if (!add_preferential_link(g, sampler, rng, nullptr)) {
    if (stats) ++stats->links_short;
  }
}

Graph generate_ig_impl(const GeneratorConfig& cfg, Rng& rng,
                       GenerationStats* stats, TraceRecorder* trace) {
  cfg.validate();
  if (cfg.m0 < 4) throw ConfigError("ig: m0 must be at least 4");
  if (cfg.m != 3) throw ConfigError("ig: the step structure fixes m at 3");
  Graph g = make_seed_graph(ModelKind::ig, cfg.m0, rng);
  PreferentialSampler sampler(g, PreferenceKernel::linear());
  std::uint64_t step = 0;
  while (g.node_count() < cfg.target_nodes) {
    NodeId new_node = 0;
    if (rng.bernoulli(cfg.ig_branch_a_prob)) {
      // new node -> one host; that host -> two distinct peers
      const NodeId host = sampler.sample(rng);
      new_node = g.add_node();
      sampler.on_node_added();
      attach(g, sampler, new_node, host);
      std::vector<NodeId> excluded{host, new_node};
      for (int i = 0; i < 2; ++i) {
        const auto peer =
            draw_eligible_peer(g, sampler, rng, host, excluded, stats);
        if (peer) {
          attach(g, sampler, host, *peer);
          excluded.push_back(*peer);
        } else {
          make_up_link(g, sampler, rng, stats);
        }
      }
    } else {
      // new node -> two distinct hosts; one of them -> one peer
      const NodeId host_a = sampler.sample(rng);
      const std::array<NodeId, 1> first{host_a};
      const NodeId host_b = sampler.sample_excluding(first, rng);
      new_node = g.add_node();
      sampler.on_node_added();
      attach(g, sampler, new_node, host_a);
      attach(g, sampler, new_node, host_b);
      const NodeId linking = rng.uniform_index(2) == 0 ? host_a : host_b;
      const std::array<NodeId, 2> excluded{linking, new_node};
      const auto peer =
          draw_eligible_peer(g, sampler, rng, linking, excluded, stats);
      if (peer) {
        attach(g, sampler, linking, *peer);
      } else {
        make_up_link(g, sampler, rng, stats);
      }
    }
    ++step;
    if (trace) trace->on_growth_step(step, new_node, g);
  }
  return g;
}

Graph dispatch(const GeneratorConfig& cfg, Rng& rng, GenerationStats* stats,
               TraceRecorder* trace) {
  switch (cfg.model) {
    case ModelKind::ba:
      return generate_ba_impl(cfg, rng, stats, trace);
    case ModelKind::glp:
      return generate_glp_impl(cfg, rng, stats, trace);
    case ModelKind::ig:
      return generate_ig_impl(cfg, rng, stats, trace);
  }
  throw ConfigError("unknown model");
}

}  // namespace

std::string_view to_string(ModelKind model) {
  switch (model) {
    case ModelKind::ba:
      return "ba";
    case ModelKind::glp:
      return "glp";
    case ModelKind::ig:
      return "ig";
  }
  return "?";
}

std::optional<ModelKind> model_from_string(std::string_view name) {
  if (name == "ba") return ModelKind::ba;
  if (name == "glp") return ModelKind::glp;
  if (name == "ig") return ModelKind::ig;
  return std::nullopt;
}

void GeneratorConfig::validate() const {
  if (m0 < 2) throw ConfigError("m0 must be at least 2");
  if (target_nodes < m0) throw ConfigError("target_nodes must be at least m0");
  if (m < 1) throw ConfigError("m must be positive");
  if (rho < 0.0 || rho > 1.0) throw ConfigError("rho must lie in [0, 1]");
  if (!(beta < 1.0)) throw ConfigError("beta must be smaller than 1");
  if (ig_branch_a_prob < 0.0 || ig_branch_a_prob > 1.0) {
    throw ConfigError("branch probability must lie in [0, 1]");
  }
  if (target_links && model != ModelKind::glp) {
    throw ConfigError("target_links applies to glp only");
  }
}

Graph make_seed_graph(ModelKind model, std::size_t m0, Rng& rng) {
  if (m0 < 2) throw ConfigError("seed graph needs at least 2 nodes");
  switch (model) {
    case ModelKind::ba:
    case ModelKind::glp: {
      Graph g(m0);
      for (NodeId i = 0; i + 1 < m0; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case ModelKind::ig: {
      if (m0 < 3) throw ConfigError("ig seed needs at least 3 nodes");
      Graph g = random_tree(m0, rng);
      // one extra uniformly random absent link brings L from m0-1 to m0
      while (true) {
        const NodeId u = static_cast<NodeId>(rng.uniform_index(m0));
        const NodeId v = static_cast<NodeId>(rng.uniform_index(m0));
        if (u != v && g.add_edge(u, v) == EdgeOutcome::added) break;
      }
      return g;
    }
  }
  throw ConfigError("unknown model");
}

Graph generate_ba(const GeneratorConfig& config, Rng& rng,
                  GenerationStats* stats) {
  if (config.model != ModelKind::ba) throw ConfigError("config.model is not ba");
  return generate_ba_impl(config, rng, stats, nullptr);
}

Graph generate_glp(const GeneratorConfig& config, Rng& rng,
                   GenerationStats* stats) {
  if (config.model != ModelKind::glp) {
    throw ConfigError("config.model is not glp");
  }
  return generate_glp_impl(config, rng, stats, nullptr);
}

Graph generate_ig(const GeneratorConfig& config, Rng& rng,
                  GenerationStats* stats) {
  if (config.model != ModelKind::ig) throw ConfigError("config.model is not ig");
  return generate_ig_impl(config, rng, stats, nullptr);
}

Graph generate(const GeneratorConfig& config, Rng& rng,
               GenerationStats* stats) {
  return dispatch(config, rng, stats, nullptr);
}

std::pair<Graph, GrowthTrace> generate_with_trace(const GeneratorConfig& config,
                                                  Rng& rng,
                                                  const TraceSpec& spec,
                                                  GenerationStats* stats) {
  GrowthTrace trace;
  TraceRecorder recorder(spec, trace);
  Graph g = dispatch(config, rng, stats, &recorder);
  return {std::move(g), std::move(trace)};
}

}  // namespace topogen
