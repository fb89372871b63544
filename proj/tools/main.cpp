#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topogen/errors.hpp"
#include "topogen/generators.hpp"
#include "topogen/graph_io.hpp"
#include "topogen/metrics.hpp"
#include "topogen/version.hpp"

namespace fs = std::filesystem;
using namespace topogen;

namespace {

/// Command-line misuse that CLI11 cannot catch itself (bad enum values,
/// unknown metric names, too few inputs). Exits with code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string now_iso8601() {
  const std::time_t now = std::time(nullptr);
  char buffer[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

std::string format_double_flag(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

void write_manifest(const fs::path& path,
                    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
  for (const auto& [key, value] : rows) {
    out << key << ": " << value << '\n';
  }
}

std::map<std::string, std::string> read_kv_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::map<std::string, std::string> result;
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    while (!value.empty() && value.front() == ' ') value.erase(value.begin());
    if (key == "output") continue;  // repeated key, not a config entry
    result[key] = value;
  }
  return result;
}

fs::path default_out_dir() {
  if (const char* env = std::getenv("TOPOGEN_OUT_DIR")) return env;
  return ".";
}

struct GenerateOptions {
  std::string model;
  std::size_t nodes = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::size_t m = 0;  // 0: model default (ba/ig 3, glp 1)
  std::size_t m0 = 10;
  double rho = 0.66;
  double beta = 0.6447;
  double branch_a_prob = 0.4;
  std::int64_t target_links = -1;  // <0: unset
  std::size_t runs = 1;
  std::string from_manifest;
};

struct AnalyzeOptions {
  std::string in;
  std::string metrics = "degree,rank,richclub,linkdist,clustering,pathlen";
  double bin_width = 0.05;
  std::string out_dir;
  bool relabel = false;
  std::size_t pathlen_samples = 0;  // 0: exact up to 2000 nodes, else 1000
};

struct EvolveOptions {
  std::string model;
  std::size_t nodes = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string theta_out;
  std::size_t m = 0;
  std::size_t m0 = 10;
  double rho = 0.66;
  double beta = 0.6447;
  double branch_a_prob = 0.4;
  std::vector<std::uint64_t> track_steps;
  std::uint64_t stride = 1;
};

struct CompareOptions {
  std::vector<std::string> inputs;
  std::string out_dir;
  double bin_width = 0.05;
};

GeneratorConfig build_config(const std::string& model_name, std::size_t nodes,
                             std::size_t m, std::size_t m0, double rho,
                             double beta, double branch_a_prob,
                             std::int64_t target_links, std::uint64_t seed) {
  const auto model = model_from_string(model_name);
  if (!model) throw UsageError("unknown model '" + model_name + "'");
  GeneratorConfig cfg;
  cfg.model = *model;
  cfg.target_nodes = nodes;
  cfg.m = m != 0 ? m : (cfg.model == ModelKind::glp ? 1 : 3);
  cfg.m0 = m0;
  cfg.rho = rho;
  cfg.beta = beta;
  cfg.ig_branch_a_prob = branch_a_prob;
  if (target_links >= 0) {
    cfg.target_links = static_cast<std::uint64_t>(target_links);
  }
  cfg.seed = seed;
  return cfg;
}

Metadata config_metadata(const GeneratorConfig& cfg) {
  Metadata meta;
  meta.set("tool", std::string("topogen ") + kToolVersion);
  meta.set("rng", kRngFamily);
  meta.set("model", std::string(to_string(cfg.model)));
  meta.set("target_nodes", std::to_string(cfg.target_nodes));
  meta.set("m0", std::to_string(cfg.m0));
  meta.set("m", std::to_string(cfg.m));
  if (cfg.model == ModelKind::glp) {
    meta.set("rho", format_double_flag(cfg.rho));
    meta.set("beta", format_double_flag(cfg.beta));
    if (cfg.target_links) {
      meta.set("target_links", std::to_string(*cfg.target_links));
    }
  }
  if (cfg.model == ModelKind::ig) {
    meta.set("branch_a_prob", format_double_flag(cfg.ig_branch_a_prob));
  }
  meta.set("seed", std::to_string(cfg.seed));
  return meta;
}

std::vector<std::pair<std::string, std::string>> config_manifest_rows(
    const GeneratorConfig& cfg) {
  const Metadata meta = config_metadata(cfg);
  return meta.entries();
}

void warn_on_stats(const GenerationStats& stats) {
  if (stats.links_skipped > 0) {
    std::cerr << "warning: " << stats.links_skipped
              << " link operation(s) skipped after redraw cap\n";
  }
  if (stats.links_short > 0) {
    std::cerr << "warning: " << stats.links_short
              << " step link(s) could not be placed\n";
  }
}

std::string optional_fraction(const std::optional<double>& value) {
  return value ? format_fraction(*value) : "nan";
}

std::string optional_count(const std::optional<std::uint64_t>& value) {
  return value ? std::to_string(*value) : "nan";
}

std::vector<std::pair<std::string, std::string>> summary_rows(
    const GraphSummary& s) {
  return {
      {"N", std::to_string(s.nodes)},
      {"L", std::to_string(s.links)},
      {"k_max", std::to_string(s.max_degree)},
      {"k_average", format_fraction(s.average_degree)},
      {"P1", format_fraction(s.p1)},
      {"P2", format_fraction(s.p2)},
      {"P3", format_fraction(s.p3)},
      {"phi_1pct", optional_fraction(s.phi_1pct)},
      {"l_top5", optional_count(s.links_touching_top5)},
      {"l_top5_top5", optional_count(s.links_within_top5)},
  };
}

fs::path run_output_path(const fs::path& base, std::size_t run_index,
                         std::size_t runs) {
  if (runs <= 1) return base;
  fs::path path = base;
  const std::string ext = path.extension().string();
  path.replace_extension();
  path += ".run" + std::to_string(run_index);
  path += ext;
  return path;
}

template <typename WriteBody>
void write_file(const fs::path& path, WriteBody&& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  body(out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

int run_generate(const GenerateOptions& opt) {
  const std::string started = now_iso8601();
  GeneratorConfig base = build_config(opt.model, opt.nodes, opt.m, opt.m0,
                                      opt.rho, opt.beta, opt.branch_a_prob,
                                      opt.target_links, opt.seed);
  base.validate();

  std::vector<fs::path> outputs;
  std::vector<GraphSummary> summaries;
  for (std::size_t run = 0; run < opt.runs; ++run) {
    GeneratorConfig cfg = base;
    cfg.seed = base.seed + run;
    Rng rng(cfg.seed);
    GenerationStats stats;
    const Graph graph = generate(cfg, rng, &stats);
    warn_on_stats(stats);

    const fs::path out_path = run_output_path(opt.out, run, opt.runs);
    write_file(out_path, [&](std::ostream& out) {
      write_edge_list(graph, config_metadata(cfg), out);
    });
    outputs.push_back(out_path);
    if (opt.runs > 1) summaries.push_back(summarize(graph));
  }

  if (opt.runs > 1) {
    fs::path ensemble = fs::path(opt.out);
    ensemble.replace_extension();
    ensemble += ".ensemble.csv";
    write_file(ensemble, [&](std::ostream& out) {
      out << "run,seed,N,L,k_max,k_average,P1,P2,P3,phi_1pct,l_top5,"
             "l_top5_top5\n";
      std::vector<std::vector<double>> columns(10);
      for (std::size_t run = 0; run < summaries.size(); ++run) {
        const GraphSummary& s = summaries[run];
        const double values[10] = {
            static_cast<double>(s.nodes),
            static_cast<double>(s.links),
            static_cast<double>(s.max_degree),
            s.average_degree,
            s.p1,
            s.p2,
            s.p3,
            s.phi_1pct.value_or(0.0),
            static_cast<double>(s.links_touching_top5.value_or(0)),
            static_cast<double>(s.links_within_top5.value_or(0))};
        out << run << ',' << (opt.seed + run);
        for (int i = 0; i < 10; ++i) {
          out << ',' << format_fraction(values[i]);
          columns[i].push_back(values[i]);
        }
        out << '\n';
      }
      for (const char* stat : {"mean", "stddev"}) {
        out << stat << ',';
        const bool want_stddev = std::string(stat) == "stddev";
        for (int i = 0; i < 10; ++i) {
          double mean = 0.0;
          for (const double v : columns[i]) mean += v;
          mean /= static_cast<double>(columns[i].size());
          double value = mean;
          if (want_stddev) {
            double ss = 0.0;
            for (const double v : columns[i]) ss += (v - mean) * (v - mean);
            value = std::sqrt(ss / static_cast<double>(columns[i].size()));
          }
          out << ',' << format_fraction(value);
        }
        out << '\n';
      }
    });
    outputs.push_back(ensemble);
  }

  auto rows = config_manifest_rows(base);
  rows.insert(rows.begin(), {"command", "generate"});
  rows.emplace_back("runs", std::to_string(opt.runs));
  rows.emplace_back("format", kEdgeListFormat);
  rows.emplace_back("started_at", started);
  rows.emplace_back("finished_at", now_iso8601());
  for (const auto& path : outputs) rows.emplace_back("output", path.string());
  write_manifest(fs::path(opt.out).string() + ".manifest", rows);
  return 0;
}

Graph load_graph(const fs::path& path, bool relabel,
                 std::vector<NodeId>* relabel_map) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  EdgeListReadResult result = read_edge_list(in);
  if (result.duplicates_collapsed > 0) {
    std::cerr << "warning: collapsed " << result.duplicates_collapsed
              << " duplicate link(s) in " << path.string() << '\n';
  }
  if (!relabel) return std::move(result.graph);
  CompactedGraph compact = compact_labels(result.graph);
  if (relabel_map) *relabel_map = compact.original_of;
  return std::move(compact.graph);
}

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int run_analyze(const AnalyzeOptions& opt) {
  const std::string started = now_iso8601();
  static const std::vector<std::string> known{
      "degree", "rank", "richclub", "linkdist", "clustering", "pathlen"};
  const auto requested = split_csv_list(opt.metrics);
  for (const auto& name : requested) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UsageError("unknown metric '" + name + "'");
    }
  }
  const auto wants = [&](const std::string& name) {
    return std::find(requested.begin(), requested.end(), name) !=
           requested.end();
  };

  const fs::path out_dir =
      opt.out_dir.empty() ? default_out_dir() : fs::path(opt.out_dir);
  fs::create_directories(out_dir);

  std::vector<NodeId> relabel_map;
  const Graph graph = load_graph(opt.in, opt.relabel, &relabel_map);
  if (graph.node_count() == 0) {
    throw std::runtime_error("input graph is empty");
  }

  std::vector<fs::path> outputs;
  const RankTable ranks = rank_table(graph);

  if (opt.relabel) {
    const fs::path path = out_dir / "relabel_map.txt";
    write_file(path, [&](std::ostream& out) {
      out << "# dense identifier -> original identifier\n";
      for (std::size_t i = 0; i < relabel_map.size(); ++i) {
        out << i << ' ' << relabel_map[i] << '\n';
      }
    });
    outputs.push_back(path);
  }

  if (wants("degree")) {
    const fs::path path = out_dir / "degree.csv";
    const DegreeDistribution dist = degree_distribution(graph);
    write_file(path, [&](std::ostream& out) {
      write_degree_distribution_csv(dist, out);
    });
    outputs.push_back(path);
  }
  if (wants("rank")) {
    const fs::path path = out_dir / "rank.csv";
    write_file(path, [&](std::ostream& out) {
      write_rank_table_csv(graph, ranks, out);
    });
    outputs.push_back(path);
  }
  if (wants("richclub")) {
    const fs::path path = out_dir / "richclub.csv";
    const RichClubCurve curve =
        rich_club_curve(graph, default_rich_club_grid(graph.node_count()));
    write_file(path,
               [&](std::ostream& out) { write_rich_club_csv(curve, out); });
    outputs.push_back(path);
  }
  if (wants("linkdist")) {
    const fs::path path = out_dir / "linkdist.csv";
    const LinkDistMatrix matrix =
        link_distribution(graph, ranks, opt.bin_width);
    write_file(path,
               [&](std::ostream& out) { write_link_dist_csv(matrix, out); });
    outputs.push_back(path);
  }

  auto rows = summary_rows(summarize(graph));
  if (wants("clustering") && graph.node_count() >= 3) {
    rows.emplace_back("clustering",
                      format_fraction(clustering_coefficient(graph)));
  }
  if (wants("pathlen")) {
    const std::size_t samples = opt.pathlen_samples != 0 ? opt.pathlen_samples
                                : graph.node_count() <= 2000
                                    ? graph.node_count()
                                    : 1000;
    rows.emplace_back("avg_path_length",
                      format_fraction(average_path_length(graph, samples)));
  }
  const fs::path summary_path = out_dir / "summary.csv";
  write_file(summary_path, [&](std::ostream& out) {
    out << "metric,value\n";
    for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
  });
  outputs.push_back(summary_path);

  std::vector<std::pair<std::string, std::string>> manifest{
      {"command", "analyze"},
      {"tool", std::string("topogen ") + kToolVersion},
      {"input", fs::path(opt.in).string()},
      {"metrics", opt.metrics},
      {"bin_width", format_double_flag(opt.bin_width)},
      {"started_at", started},
      {"finished_at", now_iso8601()},
  };
  for (const auto& path : outputs) {
    manifest.emplace_back("output", path.string());
  }
  write_manifest(out_dir / "manifest.txt", manifest);
  return 0;
}

int run_evolve(const EvolveOptions& opt) {
  const std::string started = now_iso8601();
  if (opt.track_steps.empty()) {
    throw UsageError("--track-insertion-time is required");
  }
  GeneratorConfig cfg =
      build_config(opt.model, opt.nodes, opt.m, opt.m0, opt.rho, opt.beta,
                   opt.branch_a_prob, -1, opt.seed);
  cfg.validate();

  TraceSpec spec;
  spec.insertion_steps = opt.track_steps;
  spec.stride = opt.stride;

  Rng rng(cfg.seed);
  GenerationStats stats;
  const auto [graph, trace] = generate_with_trace(cfg, rng, spec, &stats);
  warn_on_stats(stats);

  write_file(opt.out, [&](std::ostream& out) { write_trace_csv(trace, out); });

  const ThetaFit fit = fit_theta(trace);  // FitError propagates as exit 1
  std::ostringstream theta_line;
  theta_line << "theta " << fit.theta << " nodes_used " << fit.nodes_used
             << " samples " << fit.samples_used << " residual_rms "
             << fit.residual_rms;
  std::cout << theta_line.str() << '\n';
  if (!opt.theta_out.empty()) {
    write_file(opt.theta_out,
               [&](std::ostream& out) { out << theta_line.str() << '\n'; });
  }

  auto rows = config_manifest_rows(cfg);
  rows.insert(rows.begin(), {"command", "evolve"});
  rows.emplace_back("stride", std::to_string(opt.stride));
  {
    std::ostringstream steps;
    for (std::size_t i = 0; i < opt.track_steps.size(); ++i) {
      if (i) steps << ' ';
      steps << opt.track_steps[i];
    }
    rows.emplace_back("track_insertion_times", steps.str());
  }
  rows.emplace_back("theta", format_double_flag(fit.theta));
  rows.emplace_back("started_at", started);
  rows.emplace_back("finished_at", now_iso8601());
  rows.emplace_back("output", opt.out);
  if (!opt.theta_out.empty()) rows.emplace_back("output", opt.theta_out);
  write_manifest(fs::path(opt.out).string() + ".manifest", rows);
  return 0;
}

int run_compare(const CompareOptions& opt) {
  const std::string started = now_iso8601();
  if (opt.inputs.size() < 2) {
    throw UsageError("compare needs at least two --in files");
  }
  const fs::path out_dir =
      opt.out_dir.empty() ? default_out_dir() : fs::path(opt.out_dir);
  fs::create_directories(out_dir);

  std::vector<std::string> names;
  std::vector<Graph> graphs;
  for (const auto& input : opt.inputs) {
    std::string name = fs::path(input).stem().string();
    while (std::find(names.begin(), names.end(), name) != names.end()) {
      name += "_x";
    }
    names.push_back(name);
    graphs.push_back(load_graph(input, false, nullptr));
  }

  std::vector<fs::path> outputs;

  {
    std::vector<std::vector<std::pair<std::string, std::string>>> tables;
    for (const Graph& g : graphs) {
      tables.push_back(summary_rows(summarize(g)));
    }
    const fs::path path = out_dir / "summary_table.csv";
    write_file(path, [&](std::ostream& out) {
      out << "metric";
      for (const auto& name : names) out << ',' << name;
      out << '\n';
      for (std::size_t row = 0; row < tables[0].size(); ++row) {
        out << tables[0][row].first;
        for (const auto& table : tables) out << ',' << table[row].second;
        out << '\n';
      }
    });
    outputs.push_back(path);
  }

  const auto merged = [&](const char* filename, const char* header,
                          auto&& per_graph) {
    const fs::path path = out_dir / filename;
    write_file(path, [&](std::ostream& out) {
      out << "graph," << header << '\n';
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::ostringstream block;
        per_graph(graphs[i], block);
        std::istringstream lines(block.str());
        std::string line;
        std::getline(lines, line);  // drop the per-graph header
        while (std::getline(lines, line)) {
          out << names[i] << ',' << line << '\n';
        }
      }
    });
    outputs.push_back(path);
  };

  merged("degree_all.csv", "k,count,p", [](const Graph& g, std::ostream& out) {
    write_degree_distribution_csv(degree_distribution(g), out);
  });
  merged("rank_all.csv", "rank,degree", [](const Graph& g, std::ostream& out) {
    write_rank_table_csv(g, rank_table(g), out);
  });
  merged("richclub_all.csv", "r,phi", [](const Graph& g, std::ostream& out) {
    write_rich_club_csv(
        rich_club_curve(g, default_rich_club_grid(g.node_count())), out);
  });
  merged("linkdist_all.csv", "bin_i,bin_j,count",
         [&](const Graph& g, std::ostream& out) {
           write_link_dist_csv(
               link_distribution(g, rank_table(g), opt.bin_width), out);
         });

  std::vector<std::pair<std::string, std::string>> manifest{
      {"command", "compare"},
      {"tool", std::string("topogen ") + kToolVersion},
      {"bin_width", format_double_flag(opt.bin_width)},
      {"started_at", started},
      {"finished_at", now_iso8601()},
  };
  for (const auto& input : opt.inputs) manifest.emplace_back("input", input);
  for (const auto& path : outputs) {
    manifest.emplace_back("output", path.string());
  }
  write_manifest(out_dir / "manifest.txt", manifest);
  return 0;
}

void apply_manifest_defaults(const CLI::App* cmd, GenerateOptions& opt) {
  if (opt.from_manifest.empty()) return;
  const auto kv = read_kv_file(opt.from_manifest);
  const auto take = [&](const char* flag, const char* key, auto& field) {
    const auto it = kv.find(key);
    if (it == kv.end() || cmd->count(flag) > 0) return;
    std::istringstream stream(it->second);
    stream >> field;
  };
  take("--model", "model", opt.model);
  take("--nodes", "target_nodes", opt.nodes);
  take("--seed", "seed", opt.seed);
  take("--m", "m", opt.m);
  take("--m0", "m0", opt.m0);
  take("--rho", "rho", opt.rho);
  take("--beta", "beta", opt.beta);
  take("--branch-a-prob", "branch_a_prob", opt.branch_a_prob);
  take("--target-links", "target_links", opt.target_links);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-law network topology generator and analyzer"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* cmd_generate = app.add_subcommand(
      "generate", "grow a network and write a canonical edge list");
  cmd_generate->add_option("--model", gen.model, "ba, glp or ig");
  cmd_generate->add_option("--nodes", gen.nodes, "target node count");
  cmd_generate->add_option("--seed", gen.seed, "rng seed")->capture_default_str();
  cmd_generate->add_option("--out", gen.out, "output edge-list path");
  cmd_generate->add_option("--m", gen.m,
                           "links per attachment (default: glp 1, others 3)");
  cmd_generate->add_option("--m0", gen.m0, "seed graph size")->capture_default_str();
  cmd_generate->add_option("--rho", gen.rho, "glp link-only step probability")->capture_default_str();
  cmd_generate->add_option("--beta", gen.beta, "glp kernel offset")->capture_default_str();
  cmd_generate->add_option("--branch-a-prob", gen.branch_a_prob,
                           "ig branch A probability")->capture_default_str();
  cmd_generate->add_option("--target-links", gen.target_links,
                           "glp exact link top-up target");
  cmd_generate->add_option("--runs", gen.runs,
                           "ensemble size (seeds seed..seed+runs-1)")->capture_default_str();
  cmd_generate->add_option("--from-manifest", gen.from_manifest,
                           "read defaults from an earlier run manifest");

  AnalyzeOptions ana;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "compute metrics for an edge-list file");
  cmd_analyze->add_option("--in", ana.in, "input edge list")->required();
  cmd_analyze->add_option("--metrics", ana.metrics,
                          "comma list: degree,rank,richclub,linkdist,"
                          "clustering,pathlen")->capture_default_str();
  cmd_analyze->add_option("--bin-width", ana.bin_width,
                          "link-distribution bin width")->capture_default_str();
  cmd_analyze->add_option("--out-dir", ana.out_dir,
                          "output directory (default $TOPOGEN_OUT_DIR or .)");
  cmd_analyze->add_flag("--relabel", ana.relabel,
                        "compact sparse identifiers before analysis");
  cmd_analyze->add_option("--pathlen-samples", ana.pathlen_samples,
                          "BFS sources for pathlen (0 = auto)");

  EvolveOptions evo;
  CLI::App* cmd_evolve = app.add_subcommand(
      "evolve", "trace degree growth of tracked nodes and fit theta");
  cmd_evolve->add_option("--model", evo.model, "ba, glp or ig")->required();
  cmd_evolve->add_option("--nodes", evo.nodes, "target node count")
      ->required();
  cmd_evolve->add_option("--seed", evo.seed, "rng seed")->capture_default_str();
  cmd_evolve->add_option("--out", evo.out, "trace csv path")->required();
  cmd_evolve->add_option("--theta-out", evo.theta_out,
                         "optional file for the fitted theta line");
  cmd_evolve->add_option("--m", evo.m,
                         "links per attachment (default: glp 1, others 3)");
  cmd_evolve->add_option("--m0", evo.m0, "seed graph size")->capture_default_str();
  cmd_evolve->add_option("--rho", evo.rho, "glp link-only step probability")->capture_default_str();
  cmd_evolve->add_option("--beta", evo.beta, "glp kernel offset")->capture_default_str();
  cmd_evolve->add_option("--branch-a-prob", evo.branch_a_prob,
                         "ig branch A probability")->capture_default_str();
  cmd_evolve
      ->add_option("--track-insertion-time", evo.track_steps,
                   "growth step(s) whose new node is tracked (repeatable)")
      ->expected(-1);
  cmd_evolve->add_option("--stride", evo.stride, "sampling stride in steps")->capture_default_str();

  CompareOptions cmp;
  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "aligned summaries and merged metric csvs for 2+ graphs");
  cmd_compare->add_option("--in", cmp.inputs, "input edge list (repeat)");
  cmd_compare->add_option("--out-dir", cmp.out_dir,
                          "output directory (default $TOPOGEN_OUT_DIR or .)");
  cmd_compare->add_option("--bin-width", cmp.bin_width,
                          "link-distribution bin width")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_generate->parsed()) {
      apply_manifest_defaults(cmd_generate, gen);
      if (gen.model.empty() || gen.nodes == 0 || gen.out.empty()) {
        throw UsageError("generate requires --model, --nodes and --out");
      }
      return run_generate(gen);
    }
    if (cmd_analyze->parsed()) return run_analyze(ana);
    if (cmd_evolve->parsed()) return run_evolve(evo);
    if (cmd_compare->parsed()) return run_compare(cmp);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    std::cerr << "run with --help for flag descriptions\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
