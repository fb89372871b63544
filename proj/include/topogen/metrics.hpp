#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "topogen/generators.hpp"
#include "topogen/graph.hpp"

namespace topogen {

struct DegreeDistribution {
  std::map<std::uint64_t, std::uint64_t> counts;  ///< degree -> node count
  std::uint64_t node_count = 0;
  std::uint64_t link_count = 0;

  std::uint64_t max_degree() const {
    return counts.empty() ? 0 : counts.rbegin()->first;
  }
  double average_degree() const {
    return node_count == 0 ? 0.0
                           : 2.0 * static_cast<double>(link_count) /
                                 static_cast<double>(node_count);
  }
  /// P(k) = fraction of nodes with degree k.
  double probability(std::uint64_t degree) const;
};

/// Nodes sorted by decreasing degree, ties broken by ascending identifier.
struct RankTable {
  std::vector<NodeId> ordering;          ///< position -> node
  std::vector<std::uint32_t> rank_of;    ///< node -> 1-based rank

  std::size_t size() const { return ordering.size(); }
};

struct RichClubPoint {
  double r;    ///< normalized rank fraction
  double phi;  ///< links among top floor(r*N) nodes / C(n, 2)
};

struct RichClubCurve {
  std::vector<RichClubPoint> points;
};

/// Link counts between rank bins of the given normalized width. Cells are
/// stored for bin pairs (i, j) with i <= j; bin 0 holds the top-ranked
/// nodes.
struct LinkDistMatrix {
  double bin_width = 0.0;
  std::size_t bin_count = 0;
  std::uint64_t total_links = 0;
  std::vector<std::uint64_t> cells;  ///< triangular, row-major

  std::uint64_t cell(std::size_t bin_i, std::size_t bin_j) const;
};

struct TopLinkCounts {
  std::uint64_t within = 0;    ///< links with both endpoints in the top set
  std::uint64_t touching = 0;  ///< links with at least one endpoint in it
};

struct PowerLawFit {
  double exponent = 0.0;
  std::size_t bins_used = 0;
  double residual_rms = 0.0;
};

struct ThetaFit {
  double theta = 0.0;
  std::size_t nodes_used = 0;
  std::size_t samples_used = 0;
  double residual_rms = 0.0;
};

/// Table-style one-line summary of a graph.
struct GraphSummary {
  std::uint64_t nodes = 0;
  std::uint64_t links = 0;
  std::uint64_t max_degree = 0;
  double average_degree = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  std::optional<double> phi_1pct;
  std::optional<std::uint64_t> links_touching_top5;
  std::optional<std::uint64_t> links_within_top5;
};

DegreeDistribution degree_distribution(const Graph& graph);

RankTable rank_table(const Graph& graph);

/// Size of the top set selected by normalized rank fraction r: floor(r*N),
/// clamped to [0, N].
std::size_t top_set_size(double r, std::size_t node_count);

/// Exact link counts for the top_n highest-ranked nodes.
TopLinkCounts count_top_links(const Graph& graph, const RankTable& ranks,
                              std::size_t top_n);

/// phi(r) = links among the top floor(r*N) nodes over n(n-1)/2. Throws
/// MetricError when the top set holds fewer than two nodes.
double rich_club_connectivity(const Graph& graph, const RankTable& ranks,
                              double r);

RichClubCurve rich_club_curve(const Graph& graph,
                              std::span<const double> r_values);

/// 30 log-spaced fractions over [2/N, 1] plus the 1% and 5% points.
std::vector<double> default_rich_club_grid(std::size_t node_count);

LinkDistMatrix link_distribution(const Graph& graph, const RankTable& ranks,
                                 double bin_width);

/// Least-squares slope of log P(k) vs log k over log-binned degrees
/// >= k_min (10 bins per decade).
PowerLawFit fit_power_law_exponent(const DegreeDistribution& dist,
                                   std::uint64_t k_min = 3);

/// Least-squares slope of log degree vs log steps-since-insertion,
/// averaged over tracked nodes. Per node, the first 10 samples are
/// discarded and the rest must span two decades.
ThetaFit fit_theta(const GrowthTrace& trace);

/// Mean over nodes of links-among-neighbors / C(k, 2); 0 for k < 2.
double clustering_coefficient(const Graph& graph);

/// Mean shortest-path hop count on the largest connected component,
/// estimated from BFS over sample_size sources (exact when sample_size
/// covers the component).
double average_path_length(const Graph& graph, std::size_t sample_size,
                           std::uint64_t seed = 0x746f706f67656eULL);

/// Nodes of the largest connected component (ties broken toward the
/// component containing the smallest identifier).
std::vector<NodeId> largest_component(const Graph& graph);

GraphSummary summarize(const Graph& graph);

}  // namespace topogen
