#include "mc/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "mc/heuristic.hpp"

namespace mc {

SharedBound::SharedBound(Clique initial, bool stale_reads)
    : best_(std::move(initial)),
      trace_{best_.size()},
      size_(best_.size()),
      previous_size_(best_.size()),
      stale_reads_(stale_reads) {}

std::size_t SharedBound::best_size() const {
  return stale_reads_ ? previous_size_.load(std::memory_order_acquire)
                      : size_.load(std::memory_order_acquire);
}

bool SharedBound::publish(const Clique& candidate) {
  std::scoped_lock lock(mutex_);
  if (candidate.size() <= best_.size()) return false;
  previous_size_.store(best_.size(), std::memory_order_release);
  best_ = candidate;
  trace_.push_back(best_.size());
  size_.store(best_.size(), std::memory_order_release);
  generation_.fetch_add(1, std::memory_order_release);
  return true;
}

Clique SharedBound::best() const {
  std::scoped_lock lock(mutex_);
  return best_;
}

std::vector<std::size_t> SharedBound::installed_sizes() const {
  std::scoped_lock lock(mutex_);
  return trace_;
}

bool publish_bound(const Clique& candidate, SharedBound& shared) {
  return shared.publish(candidate);
}

void broadcast_removals(std::span<const vertex_t> vertices, StaticGraph& graph,
                        const CoreDecomposition& cores, std::size_t bound) {
  for (vertex_t v : vertices) {
    if (cores.core[v] >= bound) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " does not satisfy the core rule for bound " +
                                  std::to_string(bound));
    }
  }
  for (vertex_t v : vertices) graph.remove_implicit(v);
}

TaskQueue TaskQueue::by_reduced_degree(const StaticGraph& graph) {
  std::vector<vertex_t> order;
  std::vector<std::size_t> degree(graph.num_vertices(), 0);
  for (vertex_t v = 0; v < graph.num_vertices(); ++v) {
    if (!graph.alive(v)) continue;
    order.push_back(v);
    degree[v] = graph.alive_degree(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](vertex_t a, vertex_t b) { return degree[a] < degree[b]; });
  return TaskQueue(std::move(order));
}

namespace {

enum class PhaseEnd { drained, compact, certified };

struct WorkerOutcome {
  SearchStats stats;
  std::uint64_t claimed = 0;
  std::uint64_t skipped = 0;
  std::exception_ptr error;
};

}  // namespace

SearchResult max_clique_parallel(const StaticGraph& g, const SearchConfig& config,
                                 const ParallelHooks& hooks) {
  config.validate();
  if (config.workers == 1 && !hooks.before_task) return max_clique(g, config);
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
  SharedBound bound(heuristic_clique_parallel(work, cores, config.workers),
                    config.stale_bound_reads);
  result.times.heuristic = seconds_since(mark);
  mark = clock::now();
  result.heuristic_size = bound.best_size();

  Snapshot snap = make_snapshot(work, cores, identity, bound.best_size(), result.stats);
  bool done = bound.best_size() >= result.upper_bound;
  std::uint64_t phase_index = 0;
  while (!done) {
    if (snap.graph.alive_count() == 0 ||
        bound.best_size() >= static_cast<std::size_t>(snap.cores.max_core) + 1) {
      break;
    }
    CorePruner pruner(snap.graph, snap.cores, snap.to_input, config.record_trace);
    TaskQueue queue = TaskQueue::by_reduced_degree(snap.graph);
    result.tasks.queued += queue.size();
    const std::size_t n = snap.graph.num_vertices();

    std::atomic<bool> stop{false};
    std::atomic<bool> phase_over{false};
    std::atomic<int> phase_end{static_cast<int>(PhaseEnd::drained)};
    const auto phase_start = clock::now();
    std::vector<WorkerOutcome> outcomes(config.workers);
    {
      std::vector<std::jthread> threads;
      threads.reserve(config.workers);
      for (std::size_t w = 0; w < config.workers; ++w) {
        threads.emplace_back([&, w] {
          WorkerOutcome& out = outcomes[w];
          try {
            SearchContext ctx(snap.graph, snap.cores, snap.to_input, bound, pruner, config, &stop);
            std::mt19937_64 rng(config.perturb_seed ^ (0x9e3779b97f4a7c15ULL * (w + 1)) ^
                                phase_index);
            while (!phase_over.load(std::memory_order_relaxed) &&
                   !stop.load(std::memory_order_relaxed)) {
              if (config.perturb_seed != 0) {
                for (auto spins = rng() % 4; spins > 0; --spins) std::this_thread::yield();
              }
              const auto task = queue.claim();
              if (!task) break;
              if (!snap.graph.alive(*task)) {
                ++out.skipped;
                continue;
              }
              ++out.claimed;
              if (hooks.before_task) hooks.before_task(w, *task);
              initial_branch(*task, ctx);
              snap.graph.remove_implicit(*task);
              ctx.take_removed();

              if (bound.best_size() >= static_cast<std::size_t>(pruner.max_alive_core()) + 1) {
                phase_end.store(static_cast<int>(PhaseEnd::certified));
                phase_over.store(true);
                break;
              }
              const double dead = 1.0 - static_cast<double>(snap.graph.alive_count()) /
                                            static_cast<double>(n);
              if (snap.graph.alive_count() > 0 &&
                  (clock::now() - phase_start >= config.rebuild_interval ||
                   dead > config.compact_dead_fraction)) {
                int expected = static_cast<int>(PhaseEnd::drained);
                phase_end.compare_exchange_strong(expected, static_cast<int>(PhaseEnd::compact));
                phase_over.store(true);
                break;
              }
            }
            out.stats = ctx.stats;
          } catch (const search_aborted&) {
          } catch (...) {
            out.error = std::current_exception();
            stop.store(true);
          }
        });
      }
    }  // barrier: all workers joined

    for (std::size_t w = 0; w < outcomes.size(); ++w) {
      if (!outcomes[w].error) continue;
      std::string what = "unknown error";
      try {
        std::rethrow_exception(outcomes[w].error);
      } catch (const std::exception& e) {
        what = e.what();
      } catch (...) {
      }
      throw std::runtime_error("parallel search aborted: worker " + std::to_string(w) +
                               " failed: " + what);
    }
    for (const auto& out : outcomes) {
      result.stats += out.stats;
      result.tasks.claimed += out.claimed;
      result.tasks.skipped += out.skipped;
    }
    auto phase_events = pruner.take_events();
    result.prune_events.insert(result.prune_events.end(), phase_events.begin(),
                               phase_events.end());

    const auto end = static_cast<PhaseEnd>(phase_end.load());
    if (end == PhaseEnd::certified) {
      result.tasks.abandoned += queue.remaining();
      break;
    }
    if (end == PhaseEnd::drained) break;
    if (snap.graph.alive_count() == 0) {
      result.tasks.skipped += queue.remaining();
      break;
    }

    result.tasks.deferred += queue.remaining();
    ++result.stats.compactions;
    ++phase_index;
    const CoreDecomposition fresh = core_numbers(snap.graph);
    snap = make_snapshot(snap.graph, fresh, snap.to_input, bound.best_size(), result.stats);
  }

  result.clique = bound.best();
  result.bound_trace = bound.installed_sizes();
  result.times.search = seconds_since(mark);
  return result;
}

}  // namespace mc
