#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topogen/generators.hpp"
#include "topogen/graph.hpp"
#include "topogen/metrics.hpp"

namespace topogen {

/// Ordered key/value pairs carried in '#' header lines of an edge list.
class Metadata {
 public:
  void set(std::string_view key, std::string_view value);
  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Canonical edge-list writer: '#' header lines (format, node and link
/// counts, caller metadata), then one "u v" line per link with u < v,
/// sorted ascending. Output is byte-stable for identical graph + metadata.
void write_edge_list(const Graph& graph, const Metadata& meta,
                     std::ostream& out);

struct EdgeListReadResult {
  Graph graph;
  Metadata meta;
  std::uint64_t duplicates_collapsed = 0;
};

/// Accepts non-canonical input: unordered lines, u > v, extra whitespace,
/// blank lines. Self-loops and malformed lines raise ParseError with the
/// line number; duplicate pairs are collapsed and counted. Node count is
/// max identifier + 1 (or the "nodes" header when larger).
EdgeListReadResult read_edge_list(std::istream& in);

/// Drops degree-0 nodes and renumbers the rest densely in identifier
/// order; original_of[new_id] holds the prior identifier.
struct CompactedGraph {
  Graph graph;
  std::vector<NodeId> original_of;
};
CompactedGraph compact_labels(const Graph& graph);

// Metric CSV writers; fixed headers, '\n' newlines, fractions with six
// decimal places.
void write_degree_distribution_csv(const DegreeDistribution& dist,
                                   std::ostream& out);
void write_rank_table_csv(const Graph& graph, const RankTable& ranks,
                          std::ostream& out);
void write_rich_club_csv(const RichClubCurve& curve, std::ostream& out);
void write_link_dist_csv(const LinkDistMatrix& matrix, std::ostream& out);
void write_trace_csv(const GrowthTrace& trace, std::ostream& out);

/// Fixed-point decimal with six places, C locale, for all fraction output.
std::string format_fraction(double value);

}  // namespace topogen
