#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mc/types.hpp"

namespace mc {

/// Neighborhoods at or below this many vertices get a bit-matrix adjacency (<= 128 KiB).
inline constexpr std::size_t kDefaultDenseThreshold = 1024;

/// Writes a ∩ b (both sorted ascending) to `out`, which is cleared first.
void intersect_sorted(std::span<const vertex_t> a, std::span<const vertex_t> b,
                      std::vector<vertex_t>& out);

struct Compaction;

/// Undirected simple graph in compressed sparse row form.
///
/// Adjacency is immutable after build(). Vertices can be removed implicitly
/// through the alive mask; the mask only ever goes true -> false, so concurrent
/// readers may see stale "alive" values but never resurrected ones. compact()
/// produces a fresh graph holding only the alive vertices.
class StaticGraph {
 public:
  using Edge = std::pair<std::uint64_t, std::uint64_t>;

  StaticGraph() = default;
  /// Self-loops and duplicates (in either orientation) are dropped. The vertex
  /// count is max(max id + 1, min_vertices). Throws input_error if an id does
  /// not fit in vertex_t.
  static StaticGraph build(std::span<const Edge> edges, std::size_t min_vertices = 0);
  static StaticGraph build(std::initializer_list<Edge> edges, std::size_t min_vertices = 0);

  std::size_t num_vertices() const noexcept { return alive_.size(); }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(vertex_t v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(vertex_t u, vertex_t v) const noexcept;

  bool alive(vertex_t v) const noexcept;
  std::size_t alive_count() const noexcept;
  /// Number of alive neighbors of v.
  std::size_t alive_degree(vertex_t v) const noexcept;

  /// Marks v dead. Returns false if it already was (idempotent).
  bool remove_implicit(vertex_t v) noexcept;

  /// Id of v in the graph this one was originally built from.
  vertex_t original_id(vertex_t v) const noexcept { return original_ids_[v]; }
  std::span<const vertex_t> original_ids() const noexcept { return original_ids_; }
  /// Replaces the original-id labeling (size must equal num_vertices()).
  void set_original_ids(std::vector<vertex_t> ids);

  /// New graph over the alive vertices, renumbered densely in ascending id order.
  /// Must not run concurrently with remove_implicit().
  Compaction compact() const;

 private:
  std::vector<std::uint64_t> offsets_{0};
  std::vector<vertex_t> adjacency_;
  std::vector<std::uint8_t> alive_;
  std::vector<vertex_t> original_ids_;
  std::size_t alive_count_ = 0;
  std::size_t max_degree_ = 0;
};

struct Compaction {
  StaticGraph graph;
  /// parent_ids[new vertex] = vertex id in the graph compact() was called on.
  std::vector<vertex_t> parent_ids;
};

/// Symmetric bit matrix with zero diagonal.
class DenseAdjacency {
 public:
  DenseAdjacency() = default;
  explicit DenseAdjacency(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }
  bool test(local_t a, local_t b) const noexcept {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  void set(local_t a, local_t b) noexcept;
  std::span<const std::uint64_t> row(local_t a) const noexcept {
    return {bits_.data() + a * words_, words_};
  }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Induced subgraph on a vertex and a filtered subset of its neighbors.
/// Local index 0 is the center; the rest follow in ascending global id.
class NeighborhoodSubgraph {
 public:
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const vertex_t> vertices() const noexcept { return vertices_; }
  vertex_t global(local_t a) const noexcept { return vertices_[a]; }
  std::span<const local_t> neighbors(local_t a) const noexcept {
    return {adjacency_.data() + offsets_[a], adjacency_.data() + offsets_[a + 1]};
  }
  std::size_t degree(local_t a) const noexcept { return offsets_[a + 1] - offsets_[a]; }
  bool adjacent(local_t a, local_t b) const noexcept;
  const DenseAdjacency* dense() const noexcept { return dense_ ? &*dense_ : nullptr; }

 private:
  friend class NeighborhoodBuilder;
  std::vector<vertex_t> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::vector<local_t> adjacency_;
  std::optional<DenseAdjacency> dense_;
};

/// Reusable scratch for building neighborhoods of one graph. Not thread-safe;
/// give each worker its own.
class NeighborhoodBuilder {
 public:
  explicit NeighborhoodBuilder(std::size_t num_vertices,
                               std::size_t dense_threshold = kDefaultDenseThreshold);

  /// {v} ∪ {u ∈ adj(v) : alive(u), cores[u] >= min_core, !removed[u]}.
  /// Empty `cores` disables the core filter, empty `removed` means X = ∅.
  NeighborhoodSubgraph build(const StaticGraph& g, vertex_t v, core_t min_core,
                             std::span<const core_t> cores,
                             std::span<const std::uint8_t> removed = {});

 private:
  static constexpr local_t kAbsent = ~local_t{0};
  std::vector<local_t> local_of_;
  std::size_t dense_threshold_;
};

/// One-shot version of NeighborhoodBuilder::build.
NeighborhoodSubgraph reduced_neighbors(const StaticGraph& g, vertex_t v, core_t min_core,
                                       std::span<const core_t> cores,
                                       std::span<const std::uint8_t> removed = {},
                                       std::size_t dense_threshold = kDefaultDenseThreshold);

}  // namespace mc
