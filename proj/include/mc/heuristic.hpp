#pragma once

#include "mc/bounds.hpp"
#include "mc/clique.hpp"

namespace mc {

struct HeuristicOptions {
  /// Stop at the first seed whose core number is below the best size so far.
  /// Off, every seed is scanned; that never finds a strictly larger clique and
  /// exists for audits.
  bool early_exit = true;
};

/// Greedy core-guided clique search over the alive subgraph.
///
/// Seeds are visited by decreasing core number (ties: higher degree, then lower
/// id). Each seed starts a clique and scans its neighbors whose core number
/// exceeds the best size so far, again by decreasing core number, adding every
/// vertex adjacent to all members collected so far. The largest such clique wins.
Clique heuristic_clique(const StaticGraph& g, const CoreDecomposition& cores,
                        const HeuristicOptions& options = {});

/// Same search with seeds dealt round-robin to `workers` threads. Each worker
/// keeps its own best; the largest wins, ties going to the lexicographically
/// smallest member list. workers == 1 is exactly heuristic_clique().
Clique heuristic_clique_parallel(const StaticGraph& g, const CoreDecomposition& cores,
                                 std::size_t workers);

}  // namespace mc
