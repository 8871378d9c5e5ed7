#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mc/search.hpp"

namespace mc {

inline constexpr int kReportSchemaVersion = 1;

/// Wall-clock seconds per CLI phase.
struct Timings {
  double parse = 0.0;
  double preprocess = 0.0;
  double cores = 0.0;
  double heuristic = 0.0;
  double search = 0.0;
  double total = 0.0;
};

/// Extra fields of a temporal component run.
struct TemporalSummary {
  std::string time_order;  // "strict" or "input_order"
  std::size_t temporal_edges = 0;
  std::size_t reach_vertices = 0;
  std::size_t reach_edges = 0;       // self-loops excluded
  std::size_t reciprocal_edges = 0;  // edges of the graph given to the clique solver
  std::optional<bool> verified;      // set with --verify
};

/// What one CLI command reports. Optional fields are absent from the JSON
/// when the command does not compute them (kcore has no clique size).
struct RunReport {
  std::string command;
  std::string input;
  std::string format;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> degeneracy;
  std::optional<std::size_t> coloring_bound;
  std::optional<std::size_t> upper_bound;
  std::optional<std::size_t> heuristic_size;
  std::optional<std::size_t> clique_size;
  std::vector<std::string> members;  // sorted by label_less
  std::vector<std::size_t> core_sizes;  // kcore only: vertices per core number
  Timings timings;
  std::size_t workers = 1;
  std::optional<SearchConfig> config;
  std::optional<SearchStats> stats;
  std::optional<TaskStats> tasks;
  std::optional<TemporalSummary> temporal;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const RunReport& report);
std::string render_human(const RunReport& report);

/// Broken instances of heuristic <= clique <= min(L, K + 1) among the fields
/// present. Empty for a consistent report.
std::vector<std::string> report_violations(const RunReport& report);

}  // namespace mc
