// mctool: maximum clique and temporal strong component driver.
//
// Exit codes: 0 ok, 1 usage or verification failure, 2 unreadable or
// malformed input, 3 a capacity guard tripped.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <iterator>
#include <thread>

#include "mc/bounds.hpp"
#include "mc/heuristic.hpp"
#include "mc/ingest.hpp"
#include "mc/parallel.hpp"
#include "mc/profile.hpp"
#include "mc/report.hpp"
#include "mc/temporal.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

double seconds_since(clock_type::time_point t) {
  return std::chrono::duration<double>(clock_type::now() - t).count();
}

struct Options {
  std::string input;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  bool no_neighborhood_cores = false;
  double rebuild_interval = 4.0;
  std::size_t dense_threshold = mc::kDefaultDenseThreshold;
  std::string format = "auto";
  bool directed = false;
  std::uint64_t seed = 0;
  bool human = false;
  // tscc
  bool verify = false;
  bool allow_equal_times = false;
  std::uint64_t max_reach_edges = mc::ReachOptions{}.max_reach_edges;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return mc::read_input(path);
}

mc::InputFormat resolve_format(const Options& o) {
  const mc::InputFormat f = mc::parse_format_name(o.format);
  return f == mc::InputFormat::automatic ? mc::detect_format(o.input) : f;
}

const char* format_name(mc::InputFormat f) {
  switch (f) {
    case mc::InputFormat::dimacs: return "dimacs";
    case mc::InputFormat::temporal: return "temporal";
    default: return "edges";
  }
}

mc::SearchConfig search_config(const Options& o) {
  mc::SearchConfig c;
  c.use_neighborhood_cores = !o.no_neighborhood_cores;
  c.rebuild_interval = std::chrono::duration<double>(o.rebuild_interval);
  c.dense_threshold = o.dense_threshold;
  c.workers = o.threads;
  c.perturb_seed = o.seed;
  c.validate();
  return c;
}

std::vector<std::string> sorted_labels(std::span<const mc::vertex_t> members,
                                       const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (mc::vertex_t v : members) out.push_back(v < labels.size() ? labels[v] : std::to_string(v));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return mc::label_less(a, b); });
  return out;
}

struct Loaded {
  mc::PreparedGraph prepared;
  mc::InputFormat format;
};

Loaded load_graph(const Options& o, mc::RunReport& report) {
  const auto start = clock_type::now();
  const mc::InputFormat format = resolve_format(o);
  if (format == mc::InputFormat::temporal) {
    throw mc::input_error("temporal input needs the tscc command");
  }
  const std::string text = read_all(o.input);
  const mc::RawEdgeList raw =
      format == mc::InputFormat::dimacs ? mc::parse_dimacs(text) : mc::parse_edge_list(text, o.directed);
  report.timings.parse = seconds_since(start);
  const auto mark = clock_type::now();
  Loaded out{mc::preprocess(raw), format};
  report.timings.preprocess = seconds_since(mark);
  report.format = format_name(format);
  report.n = out.prepared.graph.num_vertices();
  report.m = out.prepared.graph.num_edges();
  report.warnings = out.prepared.warnings;
  return out;
}

void fill_search(mc::RunReport& report, const mc::SearchResult& r, const mc::SearchConfig& config) {
  report.degeneracy = r.degeneracy;
  report.coloring_bound = r.coloring_bound;
  report.upper_bound = r.upper_bound;
  report.heuristic_size = r.heuristic_size;
  report.clique_size = r.clique.size();
  report.timings.cores = r.times.cores;
  report.timings.heuristic = r.times.heuristic;
  report.timings.search = r.times.search;
  report.config = config;
  report.stats = r.stats;
  report.tasks = r.tasks;
}

void emit(const mc::RunReport& report, bool human) {
  for (const auto& v : mc::report_violations(report)) {
    throw mc::internal_error("inconsistent report: " + v);
  }
  if (human) {
    std::cout << mc::render_human(report);
  } else {
    std::cout << mc::to_json(report).dump(2) << '\n';
  }
}

int cmd_maxclique(const Options& o) {
  const auto start = clock_type::now();
  mc::RunReport report;
  report.command = "maxclique";
  report.input = o.input;
  report.workers = o.threads;
  const mc::SearchConfig config = search_config(o);
  const Loaded loaded = load_graph(o, report);
  const mc::SearchResult result = mc::max_clique_parallel(loaded.prepared.graph, config);
  fill_search(report, result, config);
  report.members = sorted_labels(result.clique.members(), loaded.prepared.labels);
  report.timings.total = seconds_since(start);
  emit(report, o.human);
  return 0;
}

int cmd_kcore(const Options& o) {
  const auto start = clock_type::now();
  mc::RunReport report;
  report.command = "kcore";
  report.input = o.input;
  report.workers = 1;
  const Loaded loaded = load_graph(o, report);
  const auto mark = clock_type::now();
  const mc::StaticGraph& g = loaded.prepared.graph;
  const mc::CoreDecomposition cores = mc::core_numbers(g);
  const mc::CliqueUpperBound upper = mc::clique_upper_bound(g, cores);
  report.timings.cores = seconds_since(mark);
  report.degeneracy = cores.max_core;
  report.coloring_bound = upper.coloring;
  report.upper_bound = upper.value();
  if (g.num_vertices() > 0) {
    report.core_sizes.assign(static_cast<std::size_t>(cores.max_core) + 1, 0);
    for (mc::core_t k : cores.core) ++report.core_sizes[k];
  }
  report.timings.total = seconds_since(start);
  emit(report, o.human);
  return 0;
}

int cmd_heuristic(const Options& o) {
  const auto start = clock_type::now();
  mc::RunReport report;
  report.command = "heuristic";
  report.input = o.input;
  report.workers = o.threads;
  const Loaded loaded = load_graph(o, report);
  auto mark = clock_type::now();
  const mc::StaticGraph& g = loaded.prepared.graph;
  const mc::CoreDecomposition cores = mc::core_numbers(g);
  const mc::CliqueUpperBound upper = mc::clique_upper_bound(g, cores);
  report.timings.cores = seconds_since(mark);
  mark = clock_type::now();
  const mc::Clique h = mc::heuristic_clique_parallel(g, cores, o.threads);
  report.timings.heuristic = seconds_since(mark);
  report.degeneracy = cores.max_core;
  report.coloring_bound = upper.coloring;
  report.upper_bound = upper.value();
  report.heuristic_size = h.size();
  report.members = sorted_labels(h.members(), loaded.prepared.labels);
  report.timings.total = seconds_since(start);
  emit(report, o.human);
  return 0;
}

int cmd_tscc(const Options& o) {
  const auto start = clock_type::now();
  mc::RunReport report;
  report.command = "tscc";
  report.input = o.input;
  report.workers = o.threads;
  report.format = "temporal";
  const mc::InputFormat format = mc::parse_format_name(o.format);
  if (format != mc::InputFormat::automatic && format != mc::InputFormat::temporal) {
    throw mc::input_error("tscc reads temporal input only");
  }
  const mc::SearchConfig config = search_config(o);
  const mc::TemporalNetwork net = mc::parse_temporal(read_all(o.input));
  report.timings.parse = seconds_since(start);

  mc::ReachOptions reach_options;
  reach_options.order = o.allow_equal_times ? mc::TimeOrder::input_order : mc::TimeOrder::strict;
  reach_options.max_reach_edges = o.max_reach_edges;
  const auto mark = clock_type::now();
  const mc::TsccResult result = mc::max_tscc(net, config, reach_options);
  const double elapsed = seconds_since(mark);
  fill_search(report, result.search, config);
  // Everything max_tscc did outside the clique solver is reachability construction.
  report.timings.preprocess = std::max(
      0.0, elapsed - result.search.times.cores - result.search.times.heuristic - result.search.times.search);

  report.n = net.num_vertices;
  report.m = result.reciprocal_edges;
  report.members = sorted_labels(result.members, net.labels);
  mc::TemporalSummary t;
  t.time_order = o.allow_equal_times ? "input_order" : "strict";
  t.temporal_edges = net.edges.size();
  t.reach_vertices = result.reach_vertices;
  t.reach_edges = result.reach_edges;
  t.reciprocal_edges = result.reciprocal_edges;
  if (o.verify) t.verified = mc::verify_component(net, result.members, reach_options.order);
  report.temporal = t;
  if (net.edges.empty()) report.warnings.emplace_back("temporal network has no edges");
  report.timings.total = seconds_since(start);
  emit(report, o.human);
  return t.verified.value_or(true) ? 0 : kExitUsage;
}

int cmd_profile(const std::string& path) {
  const auto records = mc::parse_timing_csv(read_all(path));
  std::cout << mc::profile_csv(mc::performance_profile(records));
  return 0;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Input file ('-' for stdin)")->required();
  cmd->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"auto", "edges", "dimacs", "temporal"}));
  auto* human = cmd->add_flag("--human", o.human, "Human-readable report instead of JSON");
  cmd->add_flag("--json", [&o](std::int64_t) { o.human = false; }, "JSON report (default)")
      ->excludes(human);
}

void add_graph_input(CLI::App* cmd, Options& o) {
  add_input(cmd, o);
  cmd->add_flag("--directed", o.directed,
                "Edge list is directed: keep the largest SCC, then reciprocated pairs");
}

void add_search(CLI::App* cmd, Options& o) {
  cmd->add_option("--threads", o.threads, "Worker threads (default: hardware parallelism)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-neighborhood-cores", o.no_neighborhood_cores,
                "Skip neighborhood core pruning and color in degree order");
  cmd->add_option("--rebuild-interval", o.rebuild_interval, "Seconds between graph compactions")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dense-threshold", o.dense_threshold,
                  "Largest neighborhood given a bit-matrix adjacency");
  cmd->add_option("--seed", o.seed, "Non-zero: randomize the parallel schedule with this seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum clique and largest temporal strong component"};
  app.require_subcommand(1);
  Options o;
  std::string profile_input;

  auto* maxclique = app.add_subcommand("maxclique", "Maximum clique of a graph");
  add_graph_input(maxclique, o);
  add_search(maxclique, o);

  auto* tscc = app.add_subcommand("tscc", "Largest temporal strong component");
  add_input(tscc, o);
  add_search(tscc, o);
  tscc->add_flag("--verify", o.verify, "Check every ordered pair for a temporal path");
  tscc->add_flag("--allow-equal-times", o.allow_equal_times,
                 "Let equal-time contacts chain in input order");
  tscc->add_option("--max-reach-edges", o.max_reach_edges,
                   "Abort when the reachability graph would exceed this many edges");

  auto* kcore = app.add_subcommand("kcore", "Core numbers and clique upper bounds");
  add_graph_input(kcore, o);

  auto* heuristic = app.add_subcommand("heuristic", "Greedy heuristic clique only");
  add_graph_input(heuristic, o);
  heuristic->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* profile = app.add_subcommand("profile", "Performance profile from problem,config,seconds CSV");
  profile->add_option("records", profile_input, "Timing CSV ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*maxclique) return cmd_maxclique(o);
    if (*tscc) return cmd_tscc(o);
    if (*kcore) return cmd_kcore(o);
    if (*heuristic) return cmd_heuristic(o);
    return cmd_profile(profile_input);
  } catch (const mc::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const mc::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return *profile ? kExitInput : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
