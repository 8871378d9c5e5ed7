#include "mc/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "mc/heuristic.hpp"

namespace mc {

void SearchConfig::validate() const {
  if (!(rebuild_interval.count() > 0)) {
    throw std::invalid_argument("rebuild interval must be positive");
  }
  if (workers == 0) throw std::invalid_argument("at least one worker is required");
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  initial_branches += o.initial_branches;
  branches += o.branches;
  pruned_by_size += o.pruned_by_size;
  pruned_by_neighborhood_core += o.pruned_by_neighborhood_core;
  pruned_by_coloring += o.pruned_by_coloring;
  pruned_by_recolor += o.pruned_by_recolor;
  neighborhood_core_drops += o.neighborhood_core_drops;
  core_rule_removals += o.core_rule_removals;
  explicit_removals += o.explicit_removals;
  compactions += o.compactions;
  improvements += o.improvements;
  return *this;
}

LocalBound::LocalBound(Clique initial) : best_(std::move(initial)) {
  trace_.push_back(best_.size());
}

bool LocalBound::publish(const Clique& candidate) {
  if (candidate.size() <= best_.size()) return false;
  best_ = candidate;
  trace_.push_back(best_.size());
  return true;
}

CorePruner::CorePruner(StaticGraph& graph, const CoreDecomposition& cores,
                       std::span<const vertex_t> to_input, bool record_events)
    : graph_(graph), cores_(cores), to_input_(to_input), record_(record_events) {
  // Counting sort by core number keeps this linear.
  std::vector<std::size_t> start(static_cast<std::size_t>(cores.max_core) + 2, 0);
  for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
    if (graph.alive(v)) ++start[cores.core[v] + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  by_core_.resize(start.back());
  for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
    if (graph.alive(v)) by_core_[start[cores.core[v]]++] = v;
  }
  high_ = by_core_.size();
}

std::size_t CorePruner::prune_below(std::size_t bound, std::vector<vertex_t>* removed) {
  std::scoped_lock lock(mutex_);
  std::size_t count = 0;
  while (low_ < by_core_.size() && cores_.core[by_core_[low_]] < bound) {
    const vertex_t v = by_core_[low_++];
    if (graph_.remove_implicit(v)) {
      ++count;
      if (removed != nullptr) removed->push_back(v);
      if (record_) events_.push_back({to_input_[v], cores_.core[v], bound});
    }
  }
  return count;
}

core_t CorePruner::max_alive_core() {
  std::scoped_lock lock(mutex_);
  while (high_ > low_ && !graph_.alive(by_core_[high_ - 1])) --high_;
  return high_ > low_ ? cores_.core[by_core_[high_ - 1]] : 0;
}

std::vector<PruneEvent> CorePruner::take_events() {
  std::scoped_lock lock(mutex_);
  return std::exchange(events_, {});
}

void BranchWorkspace::reserve(std::size_t size) {
  if (in_set_.size() >= size) return;
  in_set_.resize(size, 0);
  color_.resize(size, 0);
  degree_.resize(size, 0);
  used_.resize(size + 2, 0);
}

SearchContext::SearchContext(StaticGraph& graph, const CoreDecomposition& cores,
                             std::span<const vertex_t> to_input, BoundChannel& channel,
                             CorePruner& pruner, const SearchConfig& config,
                             const std::atomic<bool>* stop)
    : graph_(graph),
      cores_(cores),
      to_input_(to_input),
      channel_(channel),
      pruner_(pruner),
      config_(config),
      stop_(stop),
      builder_(graph.num_vertices(), config.dense_threshold) {}

void SearchContext::report_clique(const NeighborhoodSubgraph& sub,
                                  std::span<const local_t> members) {
  std::vector<vertex_t> global;
  global.reserve(members.size());
  for (local_t a : members) global.push_back(sub.global(a));
  const Clique found = Clique::certify(graph_, std::move(global)).relabeled(to_input_);
  if (!channel_.publish(found)) return;
  ++stats.improvements;
  stats.core_rule_removals += pruner_.prune_below(found.size(), &removed_);
}

std::vector<vertex_t> SearchContext::take_removed() { return std::exchange(removed_, {}); }

struct BranchKernels {
  static ColoredCandidates color(const NeighborhoodSubgraph& sub,
                                 std::span<const local_t> order, BranchWorkspace& ws) {
    ws.reserve(sub.size());
    const DenseAdjacency* dense = sub.dense();
    for (local_t a : order) ws.in_set_[a] = 1;

    ColoredCandidates out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const local_t v = order[i];
      ++ws.stamp_;
      if (dense != nullptr && i < sub.degree(v)) {
        for (std::size_t j = 0; j < i; ++j) {
          if (dense->test(v, order[j])) ws.used_[ws.color_[order[j]]] = ws.stamp_;
        }
      } else {
        for (local_t x : sub.neighbors(v)) {
          if (ws.in_set_[x] && ws.color_[x] != 0) ws.used_[ws.color_[x]] = ws.stamp_;
        }
      }
      std::uint32_t c = 1;
      while (ws.used_[c] == ws.stamp_) ++c;
      ws.color_[v] = c;
      out.num_colors = std::max(out.num_colors, c);
    }

    // Stable counting sort by color.
    std::vector<std::size_t> start(out.num_colors + 2, 0);
    for (local_t a : order) ++start[ws.color_[a] + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    out.vertices.resize(order.size());
    out.colors.resize(order.size());
    for (local_t a : order) {
      const std::size_t at = start[ws.color_[a]]++;
      out.vertices[at] = a;
      out.colors[at] = ws.color_[a];
    }
    for (local_t a : order) {
      ws.in_set_[a] = 0;
      ws.color_[a] = 0;
    }
    return out;
  }

  static ColoredCandidates recolor(const NeighborhoodSubgraph& sub,
                                   std::span<const local_t> candidates, BranchWorkspace& ws) {
    ws.reserve(sub.size());
    const DenseAdjacency* dense = sub.dense();
    for (local_t a : candidates) ws.in_set_[a] = 1;
    for (local_t a : candidates) {
      std::uint32_t d = 0;
      if (dense != nullptr && candidates.size() < sub.degree(a)) {
        for (local_t b : candidates) d += dense->test(a, b) ? 1 : 0;
      } else {
        for (local_t b : sub.neighbors(a)) d += ws.in_set_[b];
      }
      ws.degree_[a] = d;
    }
    for (local_t a : candidates) ws.in_set_[a] = 0;

    std::vector<local_t> order(candidates.begin(), candidates.end());
    std::sort(order.begin(), order.end(), [&](local_t a, local_t b) {
      if (ws.degree_[a] != ws.degree_[b]) return ws.degree_[a] > ws.degree_[b];
      return a < b;
    });
    return color(sub, order, ws);
  }

  /// P ∩ N(u), filtered by the live core rule.
  static void intersect(SearchContext& ctx, const NeighborhoodSubgraph& sub, local_t u,
                        std::span<const local_t> candidates, std::vector<local_t>& out) {
    out.clear();
    if (const DenseAdjacency* dense = sub.dense()) {
      for (local_t w : candidates) {
        if (dense->test(u, w) && ctx.usable(sub.global(w))) out.push_back(w);
      }
      return;
    }
    BranchWorkspace& ws = ctx.workspace();
    for (local_t w : sub.neighbors(u)) ws.in_set_[w] = 1;
    for (local_t w : candidates) {
      if (ws.in_set_[w] && ctx.usable(sub.global(w))) out.push_back(w);
    }
    for (local_t w : sub.neighbors(u)) ws.in_set_[w] = 0;
  }
};

ColoredCandidates color_candidates(const NeighborhoodSubgraph& sub,
                                   std::span<const local_t> order, BranchWorkspace& ws) {
  return BranchKernels::color(sub, order, ws);
}

ColoredCandidates recolor(const NeighborhoodSubgraph& sub, std::span<const local_t> candidates,
                          BranchWorkspace& ws) {
  return BranchKernels::recolor(sub, candidates, ws);
}

ColoredCandidates recolor(const NeighborhoodSubgraph& sub, std::span<const local_t> candidates) {
  BranchWorkspace ws;
  return BranchKernels::recolor(sub, candidates, ws);
}

void branch(SearchContext& ctx, const NeighborhoodSubgraph& sub, std::vector<local_t>& clique,
            ColoredCandidates candidates) {
  ++ctx.stats.branches;
  ctx.workspace().reserve(sub.size());
  if (clique.size() > ctx.depth_limit()) {
    throw internal_error("branch depth exceeds degeneracy + 1");
  }
  auto& pool = candidates.vertices;
  std::vector<local_t> next;
  while (!pool.empty() && pool.size() + clique.size() > ctx.lower_bound()) {
    ctx.check_stop();
    const local_t u = pool.back();
    pool.pop_back();
    clique.push_back(u);
    BranchKernels::intersect(ctx, sub, u, pool, next);
    if (!next.empty()) {
      auto colored = recolor(sub, next, ctx.workspace());
      if (clique.size() + colored.num_colors > ctx.lower_bound()) {
        branch(ctx, sub, clique, std::move(colored));
      } else {
        ++ctx.stats.pruned_by_recolor;
      }
    } else if (clique.size() > ctx.lower_bound()) {
      ctx.report_clique(sub, clique);
    }
    clique.pop_back();
  }
}

void initial_branch(vertex_t u, SearchContext& ctx) {
  ++ctx.stats.initial_branches;
  const std::size_t bound = ctx.lower_bound();
  const auto min_core = static_cast<core_t>(std::min<std::size_t>(bound, ~core_t{0}));
  const NeighborhoodSubgraph sub = ctx.builder().build(ctx.graph(), u, min_core, ctx.cores().core);
  if (sub.size() <= bound) {
    ++ctx.stats.pruned_by_size;
    return;
  }

  std::vector<local_t> order;
  if (ctx.config().use_neighborhood_cores) {
    const CoreDecomposition local = core_numbers(sub);
    if (static_cast<std::size_t>(local.max_core) + 1 <= bound) {
      ++ctx.stats.pruned_by_neighborhood_core;
      return;
    }
    // A clique larger than the bound lives inside the bound-core, so K_N < bound is safe to drop.
    order.reserve(sub.size());
    for (auto it = local.order.rbegin(); it != local.order.rend(); ++it) {
      if (local.core[*it] >= bound) {
        order.push_back(static_cast<local_t>(*it));
      } else {
        ++ctx.stats.neighborhood_core_drops;
      }
    }
  } else {
    order = degree_order(sub);
  }

  ColoredCandidates colored = color_candidates(sub, order, ctx.workspace());
  if (colored.num_colors <= bound) {
    ++ctx.stats.pruned_by_coloring;
    return;
  }

  // u is adjacent to everything in its neighborhood, so every maximum clique
  // there contains it: start Branch from C = {u} instead of C = {}.
  const auto at = std::find(colored.vertices.begin(), colored.vertices.end(), local_t{0});
  if (at != colored.vertices.end()) {
    const auto idx = at - colored.vertices.begin();
    colored.vertices.erase(at);
    colored.colors.erase(colored.colors.begin() + idx);
  }
  std::vector<local_t> clique{0};
  if (colored.vertices.empty()) {
    if (clique.size() > ctx.lower_bound()) ctx.report_clique(sub, clique);
    return;
  }
  branch(ctx, sub, clique, std::move(colored));
}

Snapshot make_snapshot(StaticGraph& current, const CoreDecomposition& cores,
                       std::span<const vertex_t> to_input, std::size_t lower_bound,
                       SearchStats& stats) {
  for (vertex_t v = 0; v < current.num_vertices(); ++v) {
    if (cores.core[v] < lower_bound && current.remove_implicit(v)) ++stats.explicit_removals;
  }
  Compaction compaction = current.compact();
  Snapshot snap;
  snap.graph = std::move(compaction.graph);
  const std::size_t n = snap.graph.num_vertices();
  snap.to_input.resize(n);
  snap.cores.core.resize(n);
  std::vector<vertex_t> new_id(current.num_vertices(), ~vertex_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const vertex_t parent = compaction.parent_ids[i];
    new_id[parent] = static_cast<vertex_t>(i);
    snap.to_input[i] = to_input[parent];
    snap.cores.core[i] = cores.core[parent];
    snap.cores.max_core = std::max(snap.cores.max_core, cores.core[parent]);
  }
  // Peeling visits vertices in nondecreasing core order, so the surviving
  // suffix is a valid peeling order of what is left.
  snap.cores.order.reserve(n);
  for (vertex_t v : cores.order) {
    if (new_id[v] != ~vertex_t{0}) snap.cores.order.push_back(new_id[v]);
  }
  return snap;
}

SearchResult max_clique(const StaticGraph& g, const SearchConfig& config) {
  config.validate();
  using clock = std::chrono::steady_clock;
  SearchResult result;

  const auto seconds_since = [](clock::time_point t) {
    return std::chrono::duration<double>(clock::now() - t).count();
  };
  auto mark = clock::now();
  StaticGraph work = g;
  std::vector<vertex_t> identity(g.num_vertices());
  std::iota(identity.begin(), identity.end(), vertex_t{0});
  CoreDecomposition cores = core_numbers(work);
  const CliqueUpperBound upper = clique_upper_bound(work, cores);
  result.degeneracy = cores.max_core;
  result.coloring_bound = upper.coloring;
  result.upper_bound = upper.value();
  result.times.cores = seconds_since(mark);

  mark = clock::now();
  LocalBound bound(heuristic_clique(work, cores));
  result.times.heuristic = seconds_since(mark);
  mark = clock::now();
  result.heuristic_size = bound.best_size();
  std::vector<PruneEvent> events;

  Snapshot snap = make_snapshot(work, cores, identity, bound.best_size(), result.stats);
  bool done = bound.best_size() >= result.upper_bound;
  while (!done) {
    if (snap.graph.alive_count() == 0 ||
        bound.best_size() >= static_cast<std::size_t>(snap.cores.max_core) + 1) {
      break;
    }
    CorePruner pruner(snap.graph, snap.cores, snap.to_input, config.record_trace);
    SearchContext ctx(snap.graph, snap.cores, snap.to_input, bound, pruner, config);
    StaticGraph& graph = snap.graph;
    const std::size_t n = graph.num_vertices();

    // Lazy min-heap on (reduced degree, id); stale entries are skipped on pop.
    using Entry = std::pair<std::size_t, vertex_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::vector<std::size_t> reduced(n, 0);
    for (vertex_t v = 0; v < n; ++v) {
      if (!graph.alive(v)) continue;
      reduced[v] = graph.alive_degree(v);
      queue.emplace(reduced[v], v);
    }

    const auto phase_start = clock::now();
    bool compact = false;
    while (!queue.empty()) {
      const auto [degree, u] = queue.top();
      queue.pop();
      if (!graph.alive(u) || degree != reduced[u]) continue;

      initial_branch(u, ctx);

      std::vector<vertex_t> removed = ctx.take_removed();
      if (graph.remove_implicit(u)) removed.push_back(u);
      for (vertex_t x : removed) {
        for (vertex_t w : graph.neighbors(x)) {
          if (graph.alive(w)) queue.emplace(--reduced[w], w);
        }
      }

      if (bound.best_size() >= static_cast<std::size_t>(pruner.max_alive_core()) + 1) {
        done = true;
        break;
      }
      const double dead =
          1.0 - static_cast<double>(graph.alive_count()) / static_cast<double>(n);
      if (graph.alive_count() > 0 &&
          (clock::now() - phase_start >= config.rebuild_interval ||
           dead > config.compact_dead_fraction)) {
        compact = true;
        break;
      }
    }
    result.stats += ctx.stats;
    auto phase_events = pruner.take_events();
    events.insert(events.end(), phase_events.begin(), phase_events.end());
    if (!compact) break;

    ++result.stats.compactions;
    const CoreDecomposition fresh = core_numbers(snap.graph);
    snap = make_snapshot(snap.graph, fresh, snap.to_input, bound.best_size(), result.stats);
  }

  result.clique = bound.best();
  result.bound_trace = bound.trace();
  result.prune_events = std::move(events);
  result.times.search = seconds_since(mark);
  return result;
}

}  // namespace mc
