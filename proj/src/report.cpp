#include "mc/report.hpp"

#include <sstream>

namespace mc {
namespace {

template <typename T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

nlohmann::json stats_json(const SearchStats& s) {
  return {{"initial_branches", s.initial_branches},
          {"branches", s.branches},
          {"pruned_by_size", s.pruned_by_size},
          {"pruned_by_neighborhood_core", s.pruned_by_neighborhood_core},
          {"pruned_by_coloring", s.pruned_by_coloring},
          {"pruned_by_recolor", s.pruned_by_recolor},
          {"neighborhood_core_drops", s.neighborhood_core_drops},
          {"core_rule_removals", s.core_rule_removals},
          {"explicit_removals", s.explicit_removals},
          {"compactions", s.compactions},
          {"improvements", s.improvements}};
}

}  // namespace

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  j["input"] = r.input;
  j["format"] = r.format;
  j["n"] = r.n;
  j["m"] = r.m;
  put(j, "degeneracy", r.degeneracy);
  put(j, "coloring_bound", r.coloring_bound);
  put(j, "upper_bound", r.upper_bound);
  put(j, "heuristic_size", r.heuristic_size);
  put(j, "clique_size", r.clique_size);
  if (r.clique_size || !r.members.empty()) j["members"] = r.members;
  if (!r.core_sizes.empty()) j["core_sizes"] = r.core_sizes;
  j["timings"] = {{"parse", r.timings.parse},         {"preprocess", r.timings.preprocess},
                  {"cores", r.timings.cores},         {"heuristic", r.timings.heuristic},
                  {"search", r.timings.search},       {"total", r.timings.total}};
  j["workers"] = r.workers;
  if (r.config) {
    j["config"] = {{"use_neighborhood_cores", r.config->use_neighborhood_cores},
                   {"rebuild_interval", r.config->rebuild_interval.count()},
                   {"compact_dead_fraction", r.config->compact_dead_fraction},
                   {"dense_threshold", r.config->dense_threshold},
                   {"workers", r.config->workers},
                   {"seed", r.config->perturb_seed}};
  }
  if (r.stats) j["stats"] = stats_json(*r.stats);
  if (r.tasks) {
    j["tasks"] = {{"queued", r.tasks->queued},     {"claimed", r.tasks->claimed},
                  {"skipped", r.tasks->skipped},   {"deferred", r.tasks->deferred},
                  {"abandoned", r.tasks->abandoned}};
  }
  if (r.temporal) {
    auto& t = j["temporal"];
    t["time_order"] = r.temporal->time_order;
    t["temporal_edges"] = r.temporal->temporal_edges;
    t["reach_vertices"] = r.temporal->reach_vertices;
    t["reach_edges"] = r.temporal->reach_edges;
    t["reciprocal_edges"] = r.temporal->reciprocal_edges;
    put(t, "verified", r.temporal->verified);
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string render_human(const RunReport& r) {
  std::ostringstream out;
  out << r.command << ": " << r.input << " (" << r.format << ")\n";
  out << "  vertices " << r.n << ", edges " << r.m << '\n';
  if (r.temporal) {
    out << "  temporal edges " << r.temporal->temporal_edges << ", reachability vertices "
        << r.temporal->reach_vertices << ", reachability edges " << r.temporal->reach_edges
        << ", reciprocal edges " << r.temporal->reciprocal_edges << '\n';
  }
  if (r.degeneracy) out << "  degeneracy K " << *r.degeneracy << '\n';
  if (r.coloring_bound) out << "  coloring bound L " << *r.coloring_bound << '\n';
  if (r.heuristic_size) {
    out << "  heuristic clique " << *r.heuristic_size;
    if (!r.clique_size) {
      out << ':';
      for (const auto& m : r.members) out << ' ' << m;
    }
    out << '\n';
  }
  if (r.clique_size) {
    out << "  maximum " << (r.temporal ? "component " : "clique ") << *r.clique_size << ':';
    for (const auto& m : r.members) out << ' ' << m;
    out << '\n';
  }
  if (r.temporal && r.temporal->verified) {
    out << "  verified " << (*r.temporal->verified ? "yes" : "NO") << '\n';
  }
  for (std::size_t k = 0; k < r.core_sizes.size(); ++k) {
    if (r.core_sizes[k] != 0) out << "  core " << k << ": " << r.core_sizes[k] << " vertices\n";
  }
  out << "  time " << r.timings.total << " s with " << r.workers << " worker(s)\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << '\n';
  return out.str();
}

std::vector<std::string> report_violations(const RunReport& r) {
  std::vector<std::string> bad;
  auto check = [&](const char* lhs, const std::optional<std::size_t>& a, const char* rhs,
                   const std::optional<std::size_t>& b) {
    if (a && b && *a > *b) {
      bad.push_back(std::string(lhs) + " " + std::to_string(*a) + " exceeds " + rhs + " " +
                    std::to_string(*b));
    }
  };
  const std::optional<std::size_t> core_plus_one =
      r.degeneracy ? std::optional<std::size_t>(*r.degeneracy + 1) : std::nullopt;
  check("heuristic_size", r.heuristic_size, "clique_size", r.clique_size);
  check("clique_size", r.clique_size, "coloring_bound", r.coloring_bound);
  check("clique_size", r.clique_size, "degeneracy+1", core_plus_one);
  check("coloring_bound", r.coloring_bound, "degeneracy+1", core_plus_one);
  if (r.clique_size && r.members.size() != *r.clique_size) bad.push_back("member count differs from clique_size");
  return bad;
}

}  // namespace mc
