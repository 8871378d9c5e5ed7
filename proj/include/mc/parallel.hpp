#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "mc/search.hpp"

namespace mc {

/// Incumbent shared by all workers. Reads are lock-free; installs take a lock
/// and only ever grow the size, so a reader can be behind but never ahead.
class SharedBound final : public BoundChannel {
 public:
  explicit SharedBound(Clique initial = {}, bool stale_reads = false);

  /// With stale_reads, returns the size installed one update ago.
  std::size_t best_size() const override;
  bool publish(const Clique& candidate) override;

  Clique best() const;
  std::uint64_t generation() const noexcept { return generation_.load(); }
  /// Every installed size in installation order, the initial one first.
  std::vector<std::size_t> installed_sizes() const;

 private:
  mutable std::mutex mutex_;
  Clique best_;
  std::vector<std::size_t> trace_;
  std::atomic<std::size_t> size_;
  std::atomic<std::size_t> previous_size_;
  std::atomic<std::uint64_t> generation_{0};
  bool stale_reads_;
};

/// Installs `candidate` iff strictly larger than the shared incumbent.
bool publish_bound(const Clique& candidate, SharedBound& shared);

/// Marks `vertices` dead in the shared alive mask. Each must satisfy the core
/// rule cores[v] < bound; throws std::invalid_argument otherwise.
void broadcast_removals(std::span<const vertex_t> vertices, StaticGraph& graph,
                        const CoreDecomposition& cores, std::size_t bound);

/// Vertices in a fixed order, each handed out at most once.
class TaskQueue {
 public:
  explicit TaskQueue(std::vector<vertex_t> order) : order_(std::move(order)) {}

  /// Alive vertices of `graph` by ascending alive degree, ties by ascending id.
  static TaskQueue by_reduced_degree(const StaticGraph& graph);

  std::optional<vertex_t> claim() noexcept {
    const std::size_t at = next_.fetch_add(1, std::memory_order_relaxed);
    if (at >= order_.size()) return std::nullopt;
    return order_[at];
  }
  std::size_t size() const noexcept { return order_.size(); }
  /// Tasks not yet handed out.
  std::size_t remaining() const noexcept {
    const std::size_t at = next_.load(std::memory_order_relaxed);
    return at >= order_.size() ? 0 : order_.size() - at;
  }
  std::span<const vertex_t> order() const noexcept { return order_; }

 private:
  std::vector<vertex_t> order_;
  std::atomic<std::size_t> next_{0};
};

/// Test hooks; production callers leave them empty.
struct ParallelHooks {
  /// Runs on the worker thread right before it searches `task` (snapshot id).
  std::function<void(std::size_t worker, vertex_t task)> before_task;
};

/// Exact maximum clique with `config.workers` threads. workers == 1 runs the
/// serial solver. A worker failure aborts the whole run with std::runtime_error.
SearchResult max_clique_parallel(const StaticGraph& g, const SearchConfig& config,
                                 const ParallelHooks& hooks = {});

}  // namespace mc
