#pragma once

// Brute-force references for tests. Nothing here shares code with the solver:
// the types are deliberately separate and the target links no mc sources.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mc::oracle {

struct OracleBudget {
  std::size_t max_vertices = 40;
  std::size_t max_temporal_edges = 200;
};

/// Thrown when an input exceeds the budget. Oracles never approximate.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adjacency-matrix graph; loops and duplicates are ignored by add_edge.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : n_(n), adj_(n * n, 0) {}
  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  std::size_t degree(std::size_t v) const;
  std::size_t num_edges() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

/// Sorted vertices of a maximum clique, by Bron-Kerbosch with Tomita pivoting.
/// Refuses graphs above budget.max_vertices (hard limit 64).
std::vector<std::size_t> max_clique(const SimpleGraph& g, const OracleBudget& budget = {});

/// Second, independent reference: scans every vertex subset. n <= 20 only.
std::size_t max_clique_size_by_subsets(const SimpleGraph& g);

/// True iff every pair of `members` is adjacent.
bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& members);

/// Core numbers by repeatedly deleting a minimum-degree vertex.
std::vector<std::size_t> core_numbers(const SimpleGraph& g);

struct Contact {
  std::size_t source = 0;
  std::size_t target = 0;
  double time = 0.0;
};

/// reach[u][w] is true iff a time-respecting path runs from u to w (u reaches u).
/// Strict mode needs strictly increasing times along a path; otherwise equal
/// times may chain when the later contact comes later in the input.
using ReachMatrix = std::vector<std::vector<bool>>;
ReachMatrix reachability(std::size_t n, const std::vector<Contact>& contacts, bool strict = true,
                         const OracleBudget& budget = {});

/// Vertices of the largest strongly connected component of a directed graph,
/// via pairwise reachability. Ties go to the component with the smallest vertex.
std::vector<std::size_t> largest_scc(std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                                     const OracleBudget& budget = {});

}  // namespace mc::oracle
