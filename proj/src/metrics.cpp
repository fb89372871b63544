#include "topogen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "topogen/errors.hpp"
#include "topogen/rng.hpp"

namespace topogen {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) throw FitError("line fit needs at least two points");
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
  }
  if (sxx <= 0.0) throw FitError("line fit needs spread in x");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

}  // namespace

double DegreeDistribution::probability(std::uint64_t degree) const {
  if (node_count == 0) return 0.0;
  const auto it = counts.find(degree);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(node_count);
}

DegreeDistribution degree_distribution(const Graph& graph) {
  if (graph.node_count() == 0) {
    throw MetricError("degree distribution needs at least one node");
  }
  DegreeDistribution dist;
  dist.node_count = graph.node_count();
  dist.link_count = graph.link_count();
  for (NodeId node = 0; node < graph.node_count(); ++node) {
    ++dist.counts[graph.degree(node)];
  }
  std::uint64_t total = 0;
  std::uint64_t weighted = 0;
  for (const auto& [degree, count] : dist.counts) {
    total += count;
    weighted += degree * count;
  }
  if (total != dist.node_count || weighted != 2 * dist.link_count) {
    throw std::logic_error("degree distribution conservation violated");
  }
  return dist;
}

RankTable rank_table(const Graph& graph) {
  if (graph.node_count() == 0) {
    throw MetricError("rank table needs at least one node");
  }
  RankTable table;
  table.ordering.resize(graph.node_count());
  std::iota(table.ordering.begin(), table.ordering.end(), NodeId{0});
  std::sort(table.ordering.begin(), table.ordering.end(),
            [&](NodeId a, NodeId b) {
              const std::size_t da = graph.degree(a);
              const std::size_t db = graph.degree(b);
              if (da != db) return da > db;
              return a < b;
            });
  table.rank_of.resize(graph.node_count());
  for (std::size_t pos = 0; pos < table.ordering.size(); ++pos) {
    table.rank_of[table.ordering[pos]] = static_cast<std::uint32_t>(pos + 1);
  }
  return table;
}

std::size_t top_set_size(double r, std::size_t node_count) {
  if (!(r > 0.0)) return 0;
  const double scaled = r * static_cast<double>(node_count) + 1e-9;
  const auto n = static_cast<std::size_t>(std::floor(scaled));
  return std::min(n, node_count);
}

TopLinkCounts count_top_links(const Graph& graph, const RankTable& ranks,
                              std::size_t top_n) {
  top_n = std::min(top_n, ranks.size());
  std::vector<char> in_top(graph.node_count(), 0);
  for (std::size_t i = 0; i < top_n; ++i) in_top[ranks.ordering[i]] = 1;
  std::uint64_t degree_sum = 0;
  std::uint64_t within_twice = 0;
  for (std::size_t i = 0; i < top_n; ++i) {
    const NodeId u = ranks.ordering[i];
    degree_sum += graph.degree(u);
    for (const NodeId v : graph.neighbors(u)) {
      if (in_top[v]) ++within_twice;
    }
  }
  TopLinkCounts counts;
  counts.within = within_twice / 2;
  counts.touching = degree_sum - counts.within;
  return counts;
}

double rich_club_connectivity(const Graph& graph, const RankTable& ranks,
                              double r) {
  const std::size_t n = top_set_size(r, graph.node_count());
  if (n < 2) {
    throw MetricError("rich-club connectivity undefined for top sets of size " +
                      std::to_string(n));
  }
  const TopLinkCounts counts = count_top_links(graph, ranks, n);
  const double possible =
      static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(counts.within) / possible;
}

RichClubCurve rich_club_curve(const Graph& graph,
                              std::span<const double> r_values) {
  const RankTable ranks = rank_table(graph);
  RichClubCurve curve;
  curve.points.reserve(r_values.size());
  for (const double r : r_values) {
    curve.points.push_back({r, rich_club_connectivity(graph, ranks, r)});
  }
  return curve;
}

std::vector<double> default_rich_club_grid(std::size_t node_count) {
  std::vector<double> grid;
  if (node_count < 2) return grid;
  const double lo = 2.0 / static_cast<double>(node_count);
  constexpr int kPoints = 30;
  for (int i = 0; i < kPoints; ++i) {
    const double t = static_cast<double>(i) / (kPoints - 1);
    grid.push_back(i + 1 == kPoints ? 1.0 : lo * std::pow(1.0 / lo, t));
  }
  for (const double pinned : {0.01, 0.05}) {
    if (top_set_size(pinned, node_count) >= 2) grid.push_back(pinned);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::uint64_t LinkDistMatrix::cell(std::size_t bin_i, std::size_t bin_j) const {
  if (bin_i > bin_j) std::swap(bin_i, bin_j);
  if (bin_j >= bin_count) throw std::out_of_range("bin index out of range");
  // row-major triangular: row i starts after rows of length
  // bin_count, bin_count - 1, ...
  const std::size_t row_start = bin_i * bin_count - bin_i * (bin_i - 1) / 2;
  return cells[row_start + (bin_j - bin_i)];
}

LinkDistMatrix link_distribution(const Graph& graph, const RankTable& ranks,
                                 double bin_width) {
  if (!(bin_width > 0.0 && bin_width <= 1.0)) {
    throw MetricError("bin width must lie in (0, 1]");
  }
  const std::size_t n = graph.node_count();
  const auto bins = static_cast<std::size_t>(
      std::ceil(1.0 / bin_width - 1e-9));
  if (bins > 4096) throw MetricError("bin width too small");
  // upper rank bound of each bin; bin b covers ranks (hi[b-1], hi[b]]
  std::vector<std::uint64_t> hi(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const double edge =
        static_cast<double>(b + 1) * bin_width * static_cast<double>(n) + 1e-9;
    hi[b] = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(edge));
  }
  hi[bins - 1] = n;

  const auto bin_of = [&](std::uint64_t rank) {
    return static_cast<std::size_t>(
        std::lower_bound(hi.begin(), hi.end(), rank) - hi.begin());
  };

  LinkDistMatrix matrix;
  matrix.bin_width = bin_width;
  matrix.bin_count = bins;
  matrix.cells.assign(bins * (bins + 1) / 2, 0);

  const auto cell_index = [&](std::size_t bi, std::size_t bj) {
    return bi * bins - bi * (bi - 1) / 2 + (bj - bi);
  };

  for (NodeId u = 0; u < n; ++u) {
    for (const NodeId v : graph.neighbors(u)) {
      if (v <= u) continue;
      std::size_t bi = bin_of(ranks.rank_of[u]);
      std::size_t bj = bin_of(ranks.rank_of[v]);
      if (bi > bj) std::swap(bi, bj);
      ++matrix.cells[cell_index(bi, bj)];
      ++matrix.total_links;
    }
  }
  if (matrix.total_links != graph.link_count()) {
    throw std::logic_error("link distribution conservation violated");
  }
  return matrix;
}

PowerLawFit fit_power_law_exponent(const DegreeDistribution& dist,
                                   std::uint64_t k_min) {
  std::size_t support = 0;
  for (const auto& [degree, count] : dist.counts) {
    if (degree >= k_min && count > 0) ++support;
  }
  if (support < 5) {
    throw FitError("power-law fit needs at least 5 distinct degrees >= k_min");
  }

  const std::uint64_t k_max = dist.max_degree();
  constexpr double kBinsPerDecade = 10.0;
  std::vector<double> log_x;
  std::vector<double> log_y;
  double lo = static_cast<double>(k_min);
  while (lo <= static_cast<double>(k_max)) {
    const double hi = lo * std::pow(10.0, 1.0 / kBinsPerDecade);
    const auto lo_int = static_cast<std::uint64_t>(std::ceil(lo - 1e-9));
    const auto hi_int = static_cast<std::uint64_t>(std::ceil(hi - 1e-9)) - 1;
    if (hi_int >= lo_int) {
      std::uint64_t mass = 0;
      for (auto it = dist.counts.lower_bound(lo_int);
           it != dist.counts.end() && it->first <= hi_int; ++it) {
        mass += it->second;
      }
      if (mass > 0) {
        const double width = static_cast<double>(hi_int - lo_int + 1);
        const double density = static_cast<double>(mass) /
                               (static_cast<double>(dist.node_count) * width);
        log_x.push_back(std::log10(std::sqrt(lo * hi)));
        log_y.push_back(std::log10(density));
      }
    }
    lo = hi;
  }
  if (log_x.size() < 3) {
    throw FitError("power-law fit has too few populated bins");
  }
  const LineFit line = fit_line(log_x, log_y);
  PowerLawFit fit;
  fit.exponent = line.slope;
  fit.bins_used = log_x.size();
  fit.residual_rms = line.residual_rms;
  return fit;
}

ThetaFit fit_theta(const GrowthTrace& trace) {
  constexpr std::size_t kDiscard = 10;
  constexpr std::size_t kMinSamples = 20;
  constexpr double kMinSpanRatio = 100.0;

  ThetaFit result;
  double slope_sum = 0.0;
  double residual_sq_sum = 0.0;

  for (const auto& tracked : trace.tracked) {
    std::vector<double> log_t;
    std::vector<double> log_k;
    for (const auto& sample : trace.samples) {
      if (sample.node != tracked.node) continue;
      if (sample.step <= tracked.inserted_at) continue;
      if (sample.degree == 0) continue;
      log_t.push_back(
          std::log10(static_cast<double>(sample.step - tracked.inserted_at)));
      log_k.push_back(std::log10(static_cast<double>(sample.degree)));
    }
    if (log_t.size() <= kDiscard) continue;
    log_t.erase(log_t.begin(), log_t.begin() + kDiscard);
    log_k.erase(log_k.begin(), log_k.begin() + kDiscard);
    if (log_t.size() < kMinSamples) continue;
    if (std::pow(10.0, log_t.back() - log_t.front()) < kMinSpanRatio) continue;
    const LineFit line = fit_line(log_t, log_k);
    slope_sum += line.slope;
    residual_sq_sum += line.residual_rms * line.residual_rms *
                       static_cast<double>(log_t.size());
    result.samples_used += log_t.size();
    ++result.nodes_used;
  }
  if (result.nodes_used == 0) {
    throw FitError(
        "no tracked node has 20+ samples spanning two decades of steps");
  }
  result.theta = slope_sum / static_cast<double>(result.nodes_used);
  result.residual_rms =
      std::sqrt(residual_sq_sum / static_cast<double>(result.samples_used));
  return result;
}

double clustering_coefficient(const Graph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 3) {
    throw MetricError("clustering coefficient needs at least three nodes");
  }
  std::vector<char> marked(n, 0);
  double sum = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const std::size_t k = graph.degree(u);
    if (k < 2) continue;
    for (const NodeId v : graph.neighbors(u)) marked[v] = 1;
    std::uint64_t closed_twice = 0;
    for (const NodeId v : graph.neighbors(u)) {
      for (const NodeId w : graph.neighbors(v)) {
        if (marked[w]) ++closed_twice;
      }
    }
    for (const NodeId v : graph.neighbors(u)) marked[v] = 0;
    sum += static_cast<double>(closed_twice) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(n);
}

std::vector<NodeId> largest_component(const Graph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<char> visited(n, 0);
  std::vector<NodeId> best;
  std::vector<NodeId> current;
  std::deque<NodeId> frontier;
  for (NodeId start = 0; start < n; ++start) {
    if (visited[start]) continue;
    current.clear();
    frontier.push_back(start);
    visited[start] = 1;
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop_front();
      current.push_back(u);
      for (const NodeId v : graph.neighbors(u)) {
        if (!visited[v]) {
          visited[v] = 1;
          frontier.push_back(v);
        }
      }
    }
    if (current.size() > best.size()) best = current;
  }
  std::sort(best.begin(), best.end());
  return best;
}

double average_path_length(const Graph& graph, std::size_t sample_size,
                           std::uint64_t seed) {
  if (graph.node_count() == 0) {
    throw MetricError("average path length undefined on an empty graph");
  }
  if (sample_size == 0) {
    throw MetricError("average path length needs at least one source");
  }
  std::vector<NodeId> component = largest_component(graph);
  if (component.size() < 2) {
    throw MetricError("largest component has no node pairs");
  }

  std::vector<NodeId> sources = component;
  if (sample_size < sources.size()) {
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_size; ++i) {
      const std::size_t j =
          i + rng.uniform_index(sources.size() - i);
      std::swap(sources[i], sources[j]);
    }
    sources.resize(sample_size);
  }

  std::vector<std::int64_t> dist(graph.node_count());
  std::deque<NodeId> frontier;
  std::uint64_t total = 0;
  std::uint64_t pairs = 0;
  for (const NodeId src : sources) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    frontier.clear();
    frontier.push_back(src);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop_front();
      for (const NodeId v : graph.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          frontier.push_back(v);
        }
      }
    }
    for (const NodeId v : component) {
      if (v == src) continue;
      total += static_cast<std::uint64_t>(dist[v]);
      ++pairs;
    }
  }
  return static_cast<double>(total) / static_cast<double>(pairs);
}

GraphSummary summarize(const Graph& graph) {
  GraphSummary summary;
  summary.nodes = graph.node_count();
  summary.links = graph.link_count();
  if (graph.node_count() == 0) return summary;

  const DegreeDistribution dist = degree_distribution(graph);
  summary.max_degree = dist.max_degree();
  summary.average_degree = dist.average_degree();
  summary.p1 = dist.probability(1);
  summary.p2 = dist.probability(2);
  summary.p3 = dist.probability(3);

  const RankTable ranks = rank_table(graph);
  const std::size_t n1 = top_set_size(0.01, graph.node_count());
  if (n1 >= 2) {
    summary.phi_1pct = rich_club_connectivity(graph, ranks, 0.01);
  }
  const std::size_t n5 = top_set_size(0.05, graph.node_count());
  if (n5 >= 1) {
    const TopLinkCounts counts = count_top_links(graph, ranks, n5);
    summary.links_touching_top5 = counts.touching;
    summary.links_within_top5 = counts.within;
  }
  return summary;
}

}  // namespace topogen
