#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "mc/graph.hpp"

namespace mc {

/// Core numbers plus the peeling sequence that produced them.
///
/// `order` lists vertices in the order the bucket peeler removed them, so each
/// vertex has at most `max_core` neighbors appearing after it. Dead vertices
/// get core 0 and do not appear in `order`.
struct CoreDecomposition {
  std::vector<core_t> core;
  std::vector<vertex_t> order;
  core_t max_core = 0;
};

/// Proper vertex coloring with 1-based colors; 0 marks an uncolored vertex.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;
};

/// Linear-time bucket peeling over the alive subgraph.
CoreDecomposition core_numbers(const StaticGraph& g);
CoreDecomposition core_numbers(const NeighborhoodSubgraph& sub);

/// Decreasing core order: the peeling sequence reversed. Greedy coloring in
/// this order uses at most max_core + 1 colors.
template <typename Id>
std::vector<Id> degeneracy_coloring_order(const CoreDecomposition& cores) {
  return std::vector<Id>(cores.order.rbegin(), cores.order.rend());
}

/// Alive vertices by descending degree (in the alive subgraph), ties by ascending id.
std::vector<vertex_t> degree_order(const StaticGraph& g);
std::vector<local_t> degree_order(const NeighborhoodSubgraph& sub);

/// Colors `order` greedily: each vertex gets the smallest color not used by an
/// already-colored neighbor. Vertices not in `order` stay uncolored and are ignored.
Coloring greedy_color(const StaticGraph& g, std::span<const vertex_t> order);
Coloring greedy_color(const NeighborhoodSubgraph& sub, std::span<const local_t> order);

struct CliqueUpperBound {
  std::size_t coloring = 0;       // L(G), degeneracy-order greedy coloring
  std::size_t core_plus_one = 0;  // K(G) + 1
  std::size_t value() const noexcept { return std::min(coloring, core_plus_one); }
};

/// ω(G) <= L(G) <= K(G) + 1 over the alive subgraph. Zero for an empty graph.
CliqueUpperBound clique_upper_bound(const StaticGraph& g);
CliqueUpperBound clique_upper_bound(const StaticGraph& g, const CoreDecomposition& cores);

/// max over alive v of L(N(v)) and of K(N(v)) + 1, with N(v) the closed alive neighborhood.
CliqueUpperBound neighborhood_upper_bound(const StaticGraph& g);

}  // namespace mc
