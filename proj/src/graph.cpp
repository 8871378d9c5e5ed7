#include "mc/graph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

namespace mc {

void intersect_sorted(std::span<const vertex_t> a, std::span<const vertex_t> b,
                      std::vector<vertex_t>& out) {
  out.clear();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      out.push_back(*i);
      ++i;
      ++j;
    }
  }
}

StaticGraph StaticGraph::build(std::span<const Edge> edges, std::size_t min_vertices) {
  constexpr std::uint64_t kMaxId = std::numeric_limits<vertex_t>::max() - 1;
  std::uint64_t n = min_vertices;
  for (const auto& [u, v] : edges) {
    if (u > kMaxId || v > kMaxId) {
      throw input_error("vertex id " + std::to_string(std::max(u, v)) +
                        " does not fit the configured vertex index width");
    }
    n = std::max<std::uint64_t>(n, std::max(u, v) + 1);
  }

  StaticGraph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  std::vector<vertex_t> raw(g.offsets_.back());
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = static_cast<vertex_t>(v);
    raw[fill[v]++] = static_cast<vertex_t>(u);
  }

  // Sort and dedup each list, then squeeze the gaps out.
  std::uint64_t write = 0;
  std::uint64_t begin = 0;
  for (std::uint64_t v = 0; v < n; ++v) {
    const std::uint64_t end = g.offsets_[v + 1];
    std::sort(raw.begin() + begin, raw.begin() + end);
    const auto last = std::unique(raw.begin() + begin, raw.begin() + end);
    const std::uint64_t kept = last - (raw.begin() + begin);
    std::copy(raw.begin() + begin, last, raw.begin() + write);
    g.offsets_[v] = write;
    write += kept;
    begin = end;
    g.max_degree_ = std::max<std::size_t>(g.max_degree_, kept);
  }
  g.offsets_[n] = write;
  raw.resize(write);
  raw.shrink_to_fit();
  g.adjacency_ = std::move(raw);

  g.alive_.assign(n, 1);
  g.alive_count_ = n;
  g.original_ids_.resize(n);
  std::iota(g.original_ids_.begin(), g.original_ids_.end(), vertex_t{0});
  return g;
}

StaticGraph StaticGraph::build(std::initializer_list<Edge> edges, std::size_t min_vertices) {
  return build(std::span<const Edge>(edges.begin(), edges.size()), min_vertices);
}

bool StaticGraph::has_edge(vertex_t u, vertex_t v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool StaticGraph::alive(vertex_t v) const noexcept {
  return std::atomic_ref<const std::uint8_t>(alive_[v]).load(std::memory_order_relaxed) != 0;
}

std::size_t StaticGraph::alive_count() const noexcept {
  return std::atomic_ref<const std::size_t>(alive_count_).load(std::memory_order_relaxed);
}

std::size_t StaticGraph::alive_degree(vertex_t v) const noexcept {
  std::size_t d = 0;
  for (vertex_t u : neighbors(v)) d += alive(u) ? 1 : 0;
  return d;
}

bool StaticGraph::remove_implicit(vertex_t v) noexcept {
  if (std::atomic_ref<std::uint8_t>(alive_[v]).exchange(0, std::memory_order_relaxed) == 0) {
    return false;
  }
  std::atomic_ref<std::size_t>(alive_count_).fetch_sub(1, std::memory_order_relaxed);
  return true;
}

void StaticGraph::set_original_ids(std::vector<vertex_t> ids) {
  if (ids.size() != num_vertices()) {
    throw std::invalid_argument("original id map size does not match vertex count");
  }
  original_ids_ = std::move(ids);
}

Compaction StaticGraph::compact() const {
  constexpr vertex_t kDead = std::numeric_limits<vertex_t>::max();
  const std::size_t n = num_vertices();
  std::vector<vertex_t> new_id(n, kDead);
  Compaction out;
  out.parent_ids.reserve(alive_count());
  for (std::size_t v = 0; v < n; ++v) {
    if (alive(static_cast<vertex_t>(v))) {
      new_id[v] = static_cast<vertex_t>(out.parent_ids.size());
      out.parent_ids.push_back(static_cast<vertex_t>(v));
    }
  }

  StaticGraph& g = out.graph;
  const std::size_t m = out.parent_ids.size();
  g.offsets_.assign(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t d = 0;
    for (vertex_t u : neighbors(out.parent_ids[i])) d += new_id[u] != kDead ? 1 : 0;
    g.offsets_[i + 1] = g.offsets_[i] + d;
    g.max_degree_ = std::max<std::size_t>(g.max_degree_, d);
  }
  g.adjacency_.resize(g.offsets_[m]);
  for (std::size_t i = 0; i < m; ++i) {
    auto out_it = g.adjacency_.begin() + g.offsets_[i];
    // Renumbering is monotone, so the lists stay sorted.
    for (vertex_t u : neighbors(out.parent_ids[i])) {
      if (new_id[u] != kDead) *out_it++ = new_id[u];
    }
  }
  g.alive_.assign(m, 1);
  g.alive_count_ = m;
  g.original_ids_.resize(m);
  for (std::size_t i = 0; i < m; ++i) g.original_ids_[i] = original_ids_[out.parent_ids[i]];
  return out;
}

DenseAdjacency::DenseAdjacency(std::size_t size)
    : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

void DenseAdjacency::set(local_t a, local_t b) noexcept {
  bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  bits_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

bool NeighborhoodSubgraph::adjacent(local_t a, local_t b) const noexcept {
  if (dense_) return dense_->test(a, b);
  const auto nbrs = degree(a) <= degree(b) ? neighbors(a) : neighbors(b);
  const local_t target = degree(a) <= degree(b) ? b : a;
  return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

NeighborhoodBuilder::NeighborhoodBuilder(std::size_t num_vertices, std::size_t dense_threshold)
    : local_of_(num_vertices, kAbsent), dense_threshold_(dense_threshold) {}

NeighborhoodSubgraph NeighborhoodBuilder::build(const StaticGraph& g, vertex_t v, core_t min_core,
                                                std::span<const core_t> cores,
                                                std::span<const std::uint8_t> removed) {
  NeighborhoodSubgraph sub;
  sub.vertices_.push_back(v);
  for (vertex_t u : g.neighbors(v)) {
    if (!g.alive(u)) continue;
    if (!cores.empty() && cores[u] < min_core) continue;
    if (!removed.empty() && removed[u]) continue;
    sub.vertices_.push_back(u);
  }
  const std::size_t k = sub.vertices_.size();
  for (std::size_t a = 0; a < k; ++a) local_of_[sub.vertices_[a]] = static_cast<local_t>(a);

  // The center is adjacent to every other member by construction.
  sub.offsets_.assign(k + 1, 0);
  sub.adjacency_.reserve(2 * (k - 1));
  for (std::size_t a = 0; a < k; ++a) {
    if (a == 0) {
      for (std::size_t b = 1; b < k; ++b) sub.adjacency_.push_back(static_cast<local_t>(b));
    } else {
      sub.adjacency_.push_back(0);
      for (vertex_t u : g.neighbors(sub.vertices_[a])) {
        const local_t b = local_of_[u];
        if (b != kAbsent && b != 0) sub.adjacency_.push_back(b);
      }
      // Local ids follow global order for non-center vertices, so the tail is sorted.
    }
    sub.offsets_[a + 1] = sub.adjacency_.size();
  }

  if (k <= dense_threshold_) {
    DenseAdjacency dense(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (local_t b : sub.neighbors(static_cast<local_t>(a))) {
        if (b > a) dense.set(static_cast<local_t>(a), b);
      }
    }
    sub.dense_ = std::move(dense);
  }

  for (vertex_t u : sub.vertices_) local_of_[u] = kAbsent;
  return sub;
}

NeighborhoodSubgraph reduced_neighbors(const StaticGraph& g, vertex_t v, core_t min_core,
                                       std::span<const core_t> cores,
                                       std::span<const std::uint8_t> removed,
                                       std::size_t dense_threshold) {
  NeighborhoodBuilder builder(g.num_vertices(), dense_threshold);
  return builder.build(g, v, min_core, cores, removed);
}

}  // namespace mc
