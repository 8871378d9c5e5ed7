#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mc/graph.hpp"
#include "mc/search.hpp"

namespace mc {

struct TemporalEdge {
  vertex_t source = 0;
  vertex_t target = 0;
  double time = 0.0;
};

/// Timestamped directed contacts. Edge order is the input order, which breaks
/// timestamp ties under TimeOrder::input_order.
struct TemporalNetwork {
  std::size_t num_vertices = 0;
  std::vector<TemporalEdge> edges;
  std::vector<std::string> labels;  // optional, one per vertex
};

/// How equal timestamps chain along a temporal path.
enum class TimeOrder {
  strict,       // t_j < t_{j+1}: equal-time contacts never chain
  input_order,  // ties broken by input position into a strict total order
};

struct ReachOptions {
  TimeOrder order = TimeOrder::strict;
  /// Abort with capacity_error when E_R (without self-loops) would exceed this.
  std::uint64_t max_reach_edges = std::uint64_t{1} << 31;
  /// Abort before allocating per-vertex bitmaps larger than this in total.
  std::uint64_t max_bitmap_bytes = std::uint64_t{4} << 30;
};

/// Directed strong-reachability graph: (u, w) iff a temporal path runs from u
/// to w. Every vertex reaches itself.
class ReachabilityGraph {
 public:
  ReachabilityGraph() = default;
  ReachabilityGraph(std::size_t n, std::vector<std::uint64_t> offsets,
                    std::vector<vertex_t> targets);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  /// Directed edges including the n self-loops.
  std::size_t num_edges() const noexcept { return targets_.size(); }
  std::span<const vertex_t> reachable_from(vertex_t u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  bool reaches(vertex_t u, vertex_t w) const noexcept;

  /// Unordered pairs {u, w}, u < w, with both (u, w) and (w, u) present.
  std::vector<StaticGraph::Edge> reciprocal_pairs() const;
  /// The reciprocal pairs as an undirected graph over all n vertices.
  StaticGraph reciprocal_graph() const;

 private:
  std::vector<std::uint64_t> offsets_{0};
  std::vector<vertex_t> targets_;
};

/// Reverse-time dynamic program: edges are visited latest first and each
/// contact (i, j, t) merges everything j reaches into i's set.
ReachabilityGraph reach(const TemporalNetwork& net, const ReachOptions& options = {});

struct TsccResult {
  std::vector<vertex_t> members;            // sorted
  std::vector<TemporalEdge> induced_edges;  // contacts with both ends in members
  std::size_t reach_vertices = 0;
  std::size_t reach_edges = 0;          // directed, self-loops excluded
  std::size_t reciprocal_edges = 0;     // undirected pairs fed to the clique solver
  SearchResult search;
};

/// Largest temporal strong component, via a maximum clique of the reciprocal
/// reachability graph. Uses the parallel solver when config.workers > 1.
TsccResult max_tscc(const TemporalNetwork& net, const SearchConfig& config = {},
                    const ReachOptions& options = {});

/// True iff every ordered pair of `members` is joined by a temporal path.
/// Uses an earliest-arrival scan, independent of reach().
bool verify_component(const TemporalNetwork& net, std::span<const vertex_t> members,
                      TimeOrder order = TimeOrder::strict);

}  // namespace mc
