#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mc/graph.hpp"
#include "mc/temporal.hpp"

namespace mc {

/// Parsed but unprocessed edges. Labels map dense id -> input token, assigned
/// by first appearance (DIMACS: "1".."n").
struct RawEdgeList {
  bool directed = false;
  std::size_t num_vertices = 0;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::vector<std::string> labels;
  std::vector<std::string> warnings;
};

/// Whitespace-separated `u v [weight]` lines; `#` and `%` start comments.
/// Weights are discarded. Throws input_error naming the line.
RawEdgeList parse_edge_list(std::string_view text, bool directed = false);

/// DIMACS .clq: `c` comments, one `p edge <n> <m>` line, then `e <u> <v>` (1-based).
/// An edge count that disagrees with the header is a warning, not an error.
RawEdgeList parse_dimacs(std::string_view text);

/// `u v t` lines with t real-valued. Self-loop contacts are dropped.
TemporalNetwork parse_temporal(std::string_view text);

/// Solver-ready graph with a label per vertex.
struct PreparedGraph {
  StaticGraph graph;               // original_id(v) is the RawEdgeList id
  std::vector<std::string> labels;  // labels[v] for graph vertex v
  std::vector<std::string> warnings;
};

/// Drops self-loops and duplicates. Directed input is restricted to its largest
/// strongly connected component and then to reciprocated pairs; undirected input
/// to its largest connected component. Ties between equal-size components go
/// to the one holding the smallest id.
PreparedGraph preprocess(const RawEdgeList& raw);

/// Inverse of parse_edge_list for an undirected graph: one `u v` line per edge.
std::string write_edge_list(const StaticGraph& g, const std::vector<std::string>& labels);

enum class InputFormat { automatic, edges, dimacs, temporal };

InputFormat parse_format_name(std::string_view name);
/// .clq/.dimacs/.col -> dimacs, .temporal/.tedges -> temporal, anything else -> edges.
/// A trailing .gz is ignored.
InputFormat detect_format(const std::filesystem::path& path);

/// Reads a whole file, inflating it when the name ends in .gz.
std::string read_input(const std::filesystem::path& path);

/// Orders labels numerically when both are integers, otherwise lexicographically.
bool label_less(std::string_view a, std::string_view b);

}  // namespace mc
