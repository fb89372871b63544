#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "topogen/errors.hpp"
#include "topogen/generators.hpp"
#include "topogen/graph_io.hpp"
#include "topogen/metrics.hpp"

using namespace topogen;

namespace {

std::string write_to_string(const Graph& g, const Metadata& meta = {}) {
  std::ostringstream out;
  write_edge_list(g, meta, out);
  return out.str();
}

EdgeListReadResult read_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace

TEST_CASE("canonical writer output") {
  Graph triangle = testing::complete_graph(3);
  Metadata meta;
  meta.set("model", "none");
  const std::string text = write_to_string(triangle, meta);
  CHECK(text ==
        "# format: edgelist/1\n"
        "# nodes: 3\n"
        "# links: 3\n"
        "# model: none\n"
        "0 1\n"
        "0 2\n"
        "1 2\n");

  // byte-stable across writes
  CHECK(text == write_to_string(triangle, meta));

  Graph edgeless(4);
  const std::string empty_body = write_to_string(edgeless);
  CHECK(empty_body ==
        "# format: edgelist/1\n"
        "# nodes: 4\n"
        "# links: 0\n");
}

TEST_CASE("reader normalizes non-canonical input") {
  const auto result = read_from_string("2 1\n1 2\n");
  CHECK(result.graph.node_count() == 3);
  CHECK(result.graph.link_count() == 1);
  CHECK(result.graph.degree(0) == 0);
  CHECK(result.duplicates_collapsed == 1);

  const auto spaced = read_from_string("  7\t 9 \n\n0 1\n");
  CHECK(spaced.graph.node_count() == 10);
  CHECK(spaced.graph.link_count() == 2);
  CHECK(spaced.graph.has_edge(7, 9));
}

TEST_CASE("reader rejects malformed lines with line numbers") {
  CHECK_THROWS_AS(read_from_string("3 3\n"), ParseError);
  try {
    read_from_string("0 1\n3 3\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(read_from_string("a b\n"), ParseError);
  CHECK_THROWS_AS(read_from_string("1\n"), ParseError);
  CHECK_THROWS_AS(read_from_string("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(read_from_string("-1 2\n"), ParseError);
  CHECK_THROWS_AS(read_from_string("99999999999 1\n"), ParseError);
}

TEST_CASE("empty input gives an empty graph") {
  const auto result = read_from_string("");
  CHECK(result.graph.node_count() == 0);
  CHECK(result.graph.link_count() == 0);
}

TEST_CASE("header metadata round-trips and extends the node count") {
  Graph g(5);
  g.add_edge(0, 1);  // nodes 2..4 stay isolated
  Metadata meta;
  meta.set("model", "ig");
  meta.set("seed", "42");
  const std::string text = write_to_string(g, meta);
  const auto result = read_from_string(text);
  CHECK(result.graph.node_count() == 5);
  CHECK(result.graph.link_count() == 1);
  CHECK(result.meta.get("model") == std::string("ig"));
  CHECK(result.meta.get("seed") == std::string("42"));
  CHECK(result.meta.get("format") == std::string("edgelist/1"));
}

TEST_CASE("round-trip preserves node count and edge set") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GeneratorConfig cfg;
    cfg.model = seed % 3 == 0   ? ModelKind::ba
                : seed % 3 == 1 ? ModelKind::glp
                                : ModelKind::ig;
    cfg.target_nodes = 20 + (seed % 7) * 13;
    cfg.m = cfg.model == ModelKind::ig ? 3 : 2;
    cfg.m0 = cfg.model == ModelKind::ig ? 5 : 4;
    cfg.rho = 0.4;
    cfg.beta = 0.3;
    cfg.seed = seed;
    Rng rng(seed);
    const Graph g = generate(cfg, rng);
    const auto result = read_from_string(write_to_string(g));
    CHECK(result.graph.node_count() == g.node_count());
    CHECK(testing::sorted_edges(result.graph) == testing::sorted_edges(g));
    CHECK(result.duplicates_collapsed == 0);
  }
}

TEST_CASE("compact_labels drops isolated identifiers") {
  Graph sparse(10);
  sparse.add_edge(0, 5);
  sparse.add_edge(5, 9);
  const CompactedGraph compact = compact_labels(sparse);
  CHECK(compact.graph.node_count() == 3);
  CHECK(compact.graph.link_count() == 2);
  CHECK(compact.original_of == std::vector<NodeId>{0, 5, 9});
  CHECK(compact.graph.has_edge(0, 1));
  CHECK(compact.graph.has_edge(1, 2));
}

TEST_CASE("metric csv output") {
  SUBCASE("degree distribution rows") {
    const DegreeDistribution dist =
        degree_distribution(testing::path_graph(3));
    std::ostringstream out;
    write_degree_distribution_csv(dist, out);
    CHECK(out.str() ==
          "k,count,p\n"
          "1,2,0.666667\n"
          "2,1,0.333333\n");
  }

  SUBCASE("rich club rows carry six decimal places") {
    const Graph k5 = testing::complete_graph(5);
    const std::vector<double> grid{0.4, 1.0};
    const RichClubCurve curve = rich_club_curve(k5, grid);
    std::ostringstream out;
    write_rich_club_csv(curve, out);
    CHECK(out.str() ==
          "r,phi\n"
          "0.400000,1.000000\n"
          "1.000000,1.000000\n");
  }

  SUBCASE("reparsed values match to the printed precision") {
    const Graph g = testing::random_graph(40, 0.2, 3);
    const RichClubCurve curve =
        rich_club_curve(g, default_rich_club_grid(g.node_count()));
    std::ostringstream out;
    write_rich_club_csv(curve, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "r,phi");
    std::size_t row = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      REQUIRE(comma != std::string::npos);
      const double r = std::stod(line.substr(0, comma));
      const double phi = std::stod(line.substr(comma + 1));
      CHECK(std::abs(r - curve.points[row].r) <= 5e-7);
      CHECK(std::abs(phi - curve.points[row].phi) <= 5e-7);
      ++row;
    }
    CHECK(row == curve.points.size());
  }

  SUBCASE("link matrix rows are 1-based") {
    Graph g(20);
    for (NodeId v = 1; v <= 18; ++v) g.add_edge(0, v);
    g.add_edge(0, 19);
    const RankTable ranks = rank_table(g);
    const LinkDistMatrix matrix = link_distribution(g, ranks, 0.05);
    std::ostringstream out;
    write_link_dist_csv(matrix, out);
    CHECK(out.str().find("1,20,1\n") != std::string::npos);
    CHECK(out.str().rfind("bin_i,bin_j,count\n", 0) == 0);
  }

  SUBCASE("rank and trace writers") {
    const Graph star = testing::star_graph(4);
    std::ostringstream out;
    write_rank_table_csv(star, rank_table(star), out);
    CHECK(out.str() ==
          "rank,degree\n"
          "1,3\n"
          "2,1\n"
          "3,1\n"
          "4,1\n");

    GrowthTrace trace;
    trace.tracked.push_back({2, 1});
    trace.samples.push_back({1, 2, 3});
    trace.samples.push_back({2, 2, 4});
    std::ostringstream trace_out;
    write_trace_csv(trace, trace_out);
    CHECK(trace_out.str() ==
          "t,node,degree\n"
          "1,2,3\n"
          "2,2,4\n");
  }
}
