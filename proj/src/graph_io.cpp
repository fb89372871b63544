#include "topogen/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>

#include "topogen/errors.hpp"
#include "topogen/version.hpp"

namespace topogen {

namespace {

bool parse_u64(std::string_view token, std::uint64_t& value) {
  if (token.empty()) return false;
  value = 0;
  for (const char c : token) {
    if (c < '0' || c > '9') return false;
    if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      return false;
    }
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

void Metadata::set(std::string_view key, std::string_view value) {
  for (auto& entry : entries_) {
    if (entry.first == key) {
      entry.second = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

std::optional<std::string> Metadata::get(std::string_view key) const {
  for (const auto& entry : entries_) {
    if (entry.first == key) return entry.second;
  }
  return std::nullopt;
}

std::string format_fraction(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

void write_edge_list(const Graph& graph, const Metadata& meta,
                     std::ostream& out) {
  out << "# format: " << kEdgeListFormat << '\n';
  out << "# nodes: " << graph.node_count() << '\n';
  out << "# links: " << graph.link_count() << '\n';
  for (const auto& [key, value] : meta.entries()) {
    out << "# " << key << ": " << value << '\n';
  }
  auto edges = graph.edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) {
    out << u << ' ' << v << '\n';
  }
}

EdgeListReadResult read_edge_list(std::istream& in) {
  EdgeListReadResult result;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::uint64_t max_id = 0;
  bool any_edge = false;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string_view body = view.substr(1);
      const std::size_t colon = body.find(':');
      if (colon != std::string_view::npos) {
        const std::string_view key = trim(body.substr(0, colon));
        const std::string_view value = trim(body.substr(colon + 1));
        if (!key.empty()) result.meta.set(key, value);
      }
      continue;
    }
    const auto tokens = split_ws(view);
    if (tokens.size() != 2) {
      throw ParseError(line_number, "expected two node identifiers");
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_u64(tokens[0], a) || !parse_u64(tokens[1], b)) {
      throw ParseError(line_number, "node identifier is not a decimal number");
    }
    constexpr std::uint64_t kMaxId = std::numeric_limits<NodeId>::max() - 1;
    if (a > kMaxId || b > kMaxId) {
      throw ParseError(line_number, "node identifier too large");
    }
    if (a == b) {
      throw ParseError(line_number,
                       "self-loop " + std::to_string(a) + " rejected");
    }
    pairs.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    max_id = std::max({max_id, a, b});
    any_edge = true;
  }

  std::uint64_t node_count = any_edge ? max_id + 1 : 0;
  if (const auto declared = result.meta.get("nodes")) {
    std::uint64_t n = 0;
    if (parse_u64(trim(*declared), n)) node_count = std::max(node_count, n);
  }

  result.graph = Graph(node_count);
  for (const auto& [u, v] : pairs) {
    if (result.graph.add_edge(u, v) == EdgeOutcome::duplicate) {
      ++result.duplicates_collapsed;
    }
  }
  return result;
}

CompactedGraph compact_labels(const Graph& graph) {
  CompactedGraph result;
  std::vector<NodeId> new_id(graph.node_count());
  for (NodeId node = 0; node < graph.node_count(); ++node) {
    if (graph.degree(node) == 0) continue;
    new_id[node] = static_cast<NodeId>(result.original_of.size());
    result.original_of.push_back(node);
  }
  result.graph = Graph(result.original_of.size());
  for (const auto& [u, v] : graph.edges()) {
    result.graph.add_edge(new_id[u], new_id[v]);
  }
  return result;
}

void write_degree_distribution_csv(const DegreeDistribution& dist,
                                   std::ostream& out) {
  out << "k,count,p\n";
  for (const auto& [degree, count] : dist.counts) {
    out << degree << ',' << count << ','
        << format_fraction(dist.probability(degree)) << '\n';
  }
}

void write_rank_table_csv(const Graph& graph, const RankTable& ranks,
                          std::ostream& out) {
  out << "rank,degree\n";
  for (std::size_t pos = 0; pos < ranks.ordering.size(); ++pos) {
    out << (pos + 1) << ',' << graph.degree(ranks.ordering[pos]) << '\n';
  }
}

void write_rich_club_csv(const RichClubCurve& curve, std::ostream& out) {
  out << "r,phi\n";
  for (const auto& point : curve.points) {
    out << format_fraction(point.r) << ',' << format_fraction(point.phi)
        << '\n';
  }
}

void write_link_dist_csv(const LinkDistMatrix& matrix, std::ostream& out) {
  out << "bin_i,bin_j,count\n";
  for (std::size_t i = 0; i < matrix.bin_count; ++i) {
    for (std::size_t j = i; j < matrix.bin_count; ++j) {
      out << (i + 1) << ',' << (j + 1) << ',' << matrix.cell(i, j) << '\n';
    }
  }
}

void write_trace_csv(const GrowthTrace& trace, std::ostream& out) {
  out << "t,node,degree\n";
  for (const auto& sample : trace.samples) {
    out << sample.step << ',' << sample.node << ',' << sample.degree << '\n';
  }
}

}  // namespace topogen
