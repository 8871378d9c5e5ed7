#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "mc/bounds.hpp"
#include "mc/clique.hpp"
#include "mc/graph.hpp"

namespace mc {

struct SearchConfig {
  /// Neighborhood core gates in initial_branch(). Off = degree-first coloring only.
  bool use_neighborhood_cores = true;
  /// Wall-clock period between graph compactions.
  std::chrono::duration<double> rebuild_interval{4.0};
  /// Also compact once more than this fraction of the snapshot is dead. > 1 disables.
  double compact_dead_fraction = 0.75;
  std::size_t dense_threshold = kDefaultDenseThreshold;
  std::size_t workers = 1;
  /// Parallel only: non-zero seeds random yields between tasks.
  std::uint64_t perturb_seed = 0;
  /// Parallel only: workers read the bound one installation behind.
  bool stale_bound_reads = false;
  /// Record every core-rule removal with the bound that justified it.
  bool record_trace = false;

  /// Throws std::invalid_argument on a non-positive interval or zero workers.
  void validate() const;
};

struct SearchStats {
  std::uint64_t initial_branches = 0;
  std::uint64_t branches = 0;
  std::uint64_t pruned_by_size = 0;                // |P| <= |H|
  std::uint64_t pruned_by_neighborhood_core = 0;   // K(P) + 1 <= |H|
  std::uint64_t pruned_by_coloring = 0;            // L(P) <= |H|
  std::uint64_t pruned_by_recolor = 0;             // |C'| + L(P') <= |H|
  std::uint64_t neighborhood_core_drops = 0;       // vertices dropped from P by K_N
  std::uint64_t core_rule_removals = 0;            // implicit K(v) < |H| removals
  std::uint64_t explicit_removals = 0;             // removed while building snapshots
  std::uint64_t compactions = 0;
  std::uint64_t improvements = 0;

  SearchStats& operator+=(const SearchStats& other);
};

/// A core-rule removal: `vertex` (input id) had core `core` < `bound`.
struct PruneEvent {
  vertex_t vertex = 0;
  core_t core = 0;
  std::size_t bound = 0;
};

/// Parallel task bookkeeping; all zero for the serial solver.
struct TaskStats {
  std::uint64_t queued = 0;
  std::uint64_t claimed = 0;
  std::uint64_t skipped = 0;    // removed by another worker before being claimed
  std::uint64_t deferred = 0;   // carried into the next snapshot
  std::uint64_t abandoned = 0;  // left when the bound met the upper bound
};

/// Wall-clock seconds per solver phase.
struct PhaseTimes {
  double cores = 0.0;
  double heuristic = 0.0;
  double search = 0.0;  // pruning, snapshots and branching
};

struct SearchResult {
  Clique clique;  // ids of the input graph
  std::size_t heuristic_size = 0;
  core_t degeneracy = 0;        // K(G) of the input
  std::size_t coloring_bound = 0;  // L(G) of the input
  std::size_t upper_bound = 0;     // min(L(G), K(G) + 1) of the input
  PhaseTimes times;
  SearchStats stats;
  TaskStats tasks;
  std::vector<std::size_t> bound_trace;  // installed sizes, heuristic first
  std::vector<PruneEvent> prune_events;  // only with record_trace
};

/// Read / publish access to the incumbent. Candidates carry input ids.
class BoundChannel {
 public:
  virtual ~BoundChannel() = default;
  virtual std::size_t best_size() const = 0;
  /// Installs `candidate` iff it is strictly larger than the incumbent.
  virtual bool publish(const Clique& candidate) = 0;
};

/// Single-threaded incumbent.
class LocalBound final : public BoundChannel {
 public:
  explicit LocalBound(Clique initial = {});
  std::size_t best_size() const override { return best_.size(); }
  bool publish(const Clique& candidate) override;
  const Clique& best() const noexcept { return best_; }
  const std::vector<std::size_t>& trace() const noexcept { return trace_; }

 private:
  Clique best_;
  std::vector<std::size_t> trace_;
};

/// Implicitly removes every alive vertex whose core number is below the
/// incumbent size. Thread-safe; vertices are visited in ascending core order
/// so the total work per snapshot is linear.
class CorePruner {
 public:
  CorePruner(StaticGraph& graph, const CoreDecomposition& cores,
             std::span<const vertex_t> to_input, bool record_events);

  /// Appends newly removed vertices to `removed` when non-null.
  std::size_t prune_below(std::size_t bound, std::vector<vertex_t>* removed = nullptr);
  /// Largest core number among alive vertices; 0 when none are alive.
  core_t max_alive_core();
  std::vector<PruneEvent> take_events();

 private:
  std::mutex mutex_;
  StaticGraph& graph_;
  const CoreDecomposition& cores_;
  std::span<const vertex_t> to_input_;
  std::vector<vertex_t> by_core_;
  std::size_t low_ = 0;
  std::size_t high_ = 0;
  bool record_;
  std::vector<PruneEvent> events_;
};

/// Per-neighborhood scratch for coloring; sized lazily to the largest neighborhood.
class BranchWorkspace {
 public:
  void reserve(std::size_t size);

 private:
  friend struct BranchKernels;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint32_t> degree_;
  std::uint64_t stamp_ = 0;
};

/// Thrown inside workers when a sibling failed and the run is being torn down.
class search_aborted : public std::exception {
 public:
  const char* what() const noexcept override { return "search aborted"; }
};

/// Everything one worker needs to run initial_branch() on a snapshot.
class SearchContext {
 public:
  SearchContext(StaticGraph& graph, const CoreDecomposition& cores,
                std::span<const vertex_t> to_input, BoundChannel& channel, CorePruner& pruner,
                const SearchConfig& config, const std::atomic<bool>* stop = nullptr);

  std::size_t lower_bound() const { return channel_.best_size(); }
  StaticGraph& graph() noexcept { return graph_; }
  const CoreDecomposition& cores() const noexcept { return cores_; }
  const SearchConfig& config() const noexcept { return config_; }
  NeighborhoodBuilder& builder() noexcept { return builder_; }
  BranchWorkspace& workspace() noexcept { return workspace_; }

  /// Alive and not excluded by the core rule at the current bound.
  bool usable(vertex_t v) const {
    return graph_.alive(v) && cores_.core[v] >= lower_bound();
  }
  void check_stop() const {
    if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) throw search_aborted();
  }
  /// Largest clique size possible in this snapshot; deeper recursion is a bug.
  std::size_t depth_limit() const noexcept { return static_cast<std::size_t>(cores_.max_core) + 1; }

  /// Publishes the local clique and applies the core rule if it was installed.
  void report_clique(const NeighborhoodSubgraph& sub, std::span<const local_t> members);
  /// Snapshot vertices removed by the core rule since the last call.
  std::vector<vertex_t> take_removed();

  SearchStats stats;

 private:
  StaticGraph& graph_;
  const CoreDecomposition& cores_;
  std::span<const vertex_t> to_input_;
  BoundChannel& channel_;
  CorePruner& pruner_;
  const SearchConfig& config_;
  const std::atomic<bool>* stop_;
  NeighborhoodBuilder builder_;
  BranchWorkspace workspace_;
  std::vector<vertex_t> removed_;
};

/// Candidate set ordered by ascending color, the order Branch pops from the back.
struct ColoredCandidates {
  std::vector<local_t> vertices;
  std::vector<std::uint32_t> colors;
  std::uint32_t num_colors = 0;
};

/// Greedy coloring of the subgraph induced by `order`, processed in that order.
ColoredCandidates color_candidates(const NeighborhoodSubgraph& sub,
                                   std::span<const local_t> order, BranchWorkspace& ws);

/// Greedy coloring of the subgraph induced by `candidates`, by descending degree
/// inside that subgraph (ties: ascending local id).
ColoredCandidates recolor(const NeighborhoodSubgraph& sub, std::span<const local_t> candidates,
                          BranchWorkspace& ws);
ColoredCandidates recolor(const NeighborhoodSubgraph& sub, std::span<const local_t> candidates);

/// Bounds-gated search of u's reduced neighborhood.
void initial_branch(vertex_t u, SearchContext& ctx);

/// Extends `clique` (local ids, all adjacent to every candidate) from `candidates`.
void branch(SearchContext& ctx, const NeighborhoodSubgraph& sub, std::vector<local_t>& clique,
            ColoredCandidates candidates);

/// A compacted working graph and its cores, with ids mapped back to the input.
struct Snapshot {
  StaticGraph graph;
  CoreDecomposition cores;
  std::vector<vertex_t> to_input;
};

/// Explicitly drops vertices of `current` with cores[v] < lower_bound and
/// compacts. `cores` must describe the alive subgraph of `current`.
Snapshot make_snapshot(StaticGraph& current, const CoreDecomposition& cores,
                       std::span<const vertex_t> to_input, std::size_t lower_bound,
                       SearchStats& stats);

/// Exact maximum clique of the alive subgraph of `g`, single-threaded
/// (`config.workers` is ignored; see max_clique_parallel).
SearchResult max_clique(const StaticGraph& g, const SearchConfig& config = {});

}  // namespace mc
