#include "mc/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace mc {
namespace {

// Batagelj–Zaversnik bucket peeling. Vertices start in their bins in ascending
// id order; swaps inside a bin keep the run deterministic for a given input.
template <typename Id, typename IsAlive, typename Neighbors>
CoreDecomposition peel(std::size_t n, IsAlive&& is_alive, Neighbors&& neighbors) {
  CoreDecomposition out;
  out.core.assign(n, 0);

  std::vector<std::size_t> degree(n, 0);
  std::size_t max_degree = 0;
  std::size_t live = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_alive(static_cast<Id>(v))) continue;
    ++live;
    std::size_t d = 0;
    for (Id u : neighbors(static_cast<Id>(v))) d += is_alive(u) ? 1 : 0;
    degree[v] = d;
    max_degree = std::max(max_degree, d);
  }

  std::vector<std::size_t> bin(max_degree + 2, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (is_alive(static_cast<Id>(v))) ++bin[degree[v]];
  }
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<Id> vert(live);
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_alive(static_cast<Id>(v))) continue;
    pos[v] = bin[degree[v]]++;
    vert[pos[v]] = static_cast<Id>(v);
  }
  for (std::size_t d = bin.size() - 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < live; ++i) {
    const Id v = vert[i];
    for (Id u : neighbors(v)) {
      if (!is_alive(u) || degree[u] <= degree[v]) continue;
      const std::size_t du = degree[u];
      const std::size_t pu = pos[u];
      const std::size_t pw = bin[du];
      const Id w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --degree[u];
    }
  }

  out.order.reserve(live);
  for (Id v : vert) {
    out.core[v] = static_cast<core_t>(degree[v]);
    out.max_core = std::max(out.max_core, out.core[v]);
    out.order.push_back(static_cast<vertex_t>(v));
  }
  return out;
}

template <typename Id, typename Neighbors>
Coloring color_in_order(std::size_t n, std::span<const Id> order, Neighbors&& neighbors) {
  Coloring out;
  out.color.assign(n, 0);
  // used[c] == stamp marks color c as taken by a neighbor of the current vertex.
  std::vector<std::size_t> used(order.size() + 2, 0);
  std::size_t stamp = 0;
  for (Id v : order) {
    ++stamp;
    for (Id u : neighbors(v)) {
      const std::uint32_t c = out.color[u];
      if (c != 0 && c < used.size()) used[c] = stamp;
    }
    std::uint32_t c = 1;
    while (used[c] == stamp) ++c;
    out.color[v] = c;
    out.num_colors = std::max(out.num_colors, c);
  }
  return out;
}

}  // namespace

CoreDecomposition core_numbers(const StaticGraph& g) {
  return peel<vertex_t>(
      g.num_vertices(), [&](vertex_t v) { return g.alive(v); },
      [&](vertex_t v) { return g.neighbors(v); });
}

CoreDecomposition core_numbers(const NeighborhoodSubgraph& sub) {
  return peel<local_t>(
      sub.size(), [](local_t) { return true; }, [&](local_t a) { return sub.neighbors(a); });
}

std::vector<vertex_t> degree_order(const StaticGraph& g) {
  std::vector<vertex_t> order;
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (!g.alive(v)) continue;
    order.push_back(v);
    degree[v] = g.alive_degree(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](vertex_t a, vertex_t b) { return degree[a] > degree[b]; });
  return order;
}

std::vector<local_t> degree_order(const NeighborhoodSubgraph& sub) {
  std::vector<local_t> order(sub.size());
  std::iota(order.begin(), order.end(), local_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](local_t a, local_t b) { return sub.degree(a) > sub.degree(b); });
  return order;
}

Coloring greedy_color(const StaticGraph& g, std::span<const vertex_t> order) {
  return color_in_order<vertex_t>(g.num_vertices(), order,
                                  [&](vertex_t v) { return g.neighbors(v); });
}

Coloring greedy_color(const NeighborhoodSubgraph& sub, std::span<const local_t> order) {
  return color_in_order<local_t>(sub.size(), order,
                                 [&](local_t a) { return sub.neighbors(a); });
}

CliqueUpperBound clique_upper_bound(const StaticGraph& g, const CoreDecomposition& cores) {
  CliqueUpperBound out;
  if (cores.order.empty()) return out;
  const auto order = degeneracy_coloring_order<vertex_t>(cores);
  out.coloring = greedy_color(g, order).num_colors;
  out.core_plus_one = static_cast<std::size_t>(cores.max_core) + 1;
  return out;
}

CliqueUpperBound clique_upper_bound(const StaticGraph& g) {
  return clique_upper_bound(g, core_numbers(g));
}

CliqueUpperBound neighborhood_upper_bound(const StaticGraph& g) {
  CliqueUpperBound out;
  NeighborhoodBuilder builder(g.num_vertices(), 0);
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (!g.alive(v)) continue;
    const auto sub = builder.build(g, v, 0, {});
    const auto cores = core_numbers(sub);
    const auto order = degeneracy_coloring_order<local_t>(cores);
    out.coloring = std::max<std::size_t>(out.coloring, greedy_color(sub, order).num_colors);
    out.core_plus_one = std::max<std::size_t>(out.core_plus_one, cores.max_core + 1);
  }
  return out;
}

}  // namespace mc
