#include "mc/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace mc {
namespace {

/// Calls fn(line_number, line) for every line, without the trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
  }
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_comment(std::string_view first) {
  return first.front() == '#' || first.front() == '%';
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

class LabelMap {
 public:
  vertex_t intern(std::string_view label, std::size_t line) {
    const auto [it, inserted] = ids_.try_emplace(std::string(label), 0);
    if (inserted) {
      if (labels_.size() >= std::numeric_limits<vertex_t>::max()) {
        throw input_error("too many vertices for the configured index width", line);
      }
      it->second = static_cast<vertex_t>(labels_.size());
      labels_.emplace_back(label);
    }
    return it->second;
  }
  std::vector<std::string> take() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, vertex_t> ids_;
  std::vector<std::string> labels_;
};

/// Iterative Tarjan over a directed CSR; returns a component id per vertex.
std::vector<std::size_t> strong_components(std::size_t n,
                                           const std::vector<std::uint64_t>& offsets,
                                           const std::vector<vertex_t>& targets) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<vertex_t> stack;
  std::vector<std::pair<vertex_t, std::uint64_t>> call;  // (vertex, next edge)
  std::size_t counter = 0;
  std::size_t components = 0;
  for (vertex_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, offsets[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < offsets[v + 1]) {
        const vertex_t w = targets[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, offsets[w]);
        } else if (comp[w] == kUnvisited) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const vertex_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        vertex_t w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return comp;
}

/// Component id with the most members; ties go to the one holding the smallest vertex.
std::size_t largest_component(const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> size;
  std::vector<std::size_t> first;
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (comp[v] >= size.size()) {
      size.resize(comp[v] + 1, 0);
      first.resize(comp[v] + 1, std::numeric_limits<std::size_t>::max());
    }
    ++size[comp[v]];
    first[comp[v]] = std::min(first[comp[v]], v);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < size.size(); ++c) {
    if (size[c] > size[best] || (size[c] == size[best] && first[c] < first[best])) best = c;
  }
  return best;
}

/// Builds the output graph over `keep` (raw ids) with `edges` in raw ids.
PreparedGraph assemble(const RawEdgeList& raw, const std::vector<std::uint8_t>& keep,
                       const std::vector<StaticGraph::Edge>& edges) {
  std::vector<vertex_t> new_id(raw.num_vertices, 0);
  std::vector<vertex_t> original;
  PreparedGraph out;
  for (std::size_t v = 0; v < raw.num_vertices; ++v) {
    if (!keep[v]) continue;
    new_id[v] = static_cast<vertex_t>(original.size());
    original.push_back(static_cast<vertex_t>(v));
    out.labels.push_back(v < raw.labels.size() ? raw.labels[v] : std::to_string(v));
  }
  std::vector<StaticGraph::Edge> renamed;
  renamed.reserve(edges.size());
  for (const auto& [u, v] : edges) renamed.emplace_back(new_id[u], new_id[v]);
  out.graph = StaticGraph::build(std::span<const StaticGraph::Edge>(renamed), original.size());
  out.graph.set_original_ids(std::move(original));
  out.warnings = raw.warnings;
  if (out.graph.num_edges() == 0) out.warnings.emplace_back("preprocessed graph has no edges");
  return out;
}

}  // namespace

RawEdgeList parse_edge_list(std::string_view text, bool directed) {
  RawEdgeList raw;
  raw.directed = directed;
  LabelMap labels;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || is_comment(tokens.front())) return;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw input_error("expected 'u v [weight]', got " + std::to_string(tokens.size()) +
                            " fields",
                        line_no);
    }
    if (tokens.size() == 3) {
      double weight = 0;
      if (!parse_number(tokens[2], weight)) throw input_error("weight is not a number", line_no);
    }
    const vertex_t u = labels.intern(tokens[0], line_no);
    const vertex_t v = labels.intern(tokens[1], line_no);
    raw.edges.emplace_back(u, v);
  });
  raw.labels = labels.take();
  raw.num_vertices = raw.labels.size();
  return raw;
}

RawEdgeList parse_dimacs(std::string_view text) {
  RawEdgeList raw;
  bool have_header = false;
  std::uint64_t declared_edges = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front() == "c") return;
    if (tokens.front() == "p") {
      if (have_header) throw input_error("duplicate 'p' line", line_no);
      std::uint64_t n = 0;
      if (tokens.size() != 4 || !parse_number(tokens[2], n) ||
          !parse_number(tokens[3], declared_edges)) {
        throw input_error("expected 'p edge <n> <m>'", line_no);
      }
      if (n >= std::numeric_limits<vertex_t>::max()) {
        throw input_error("vertex count does not fit the configured index width", line_no);
      }
      raw.num_vertices = n;
      have_header = true;
      return;
    }
    if (tokens.front() == "e") {
      if (!have_header) throw input_error("'e' line before the 'p' line", line_no);
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      if (tokens.size() != 3 || !parse_number(tokens[1], u) || !parse_number(tokens[2], v)) {
        throw input_error("expected 'e <u> <v>'", line_no);
      }
      if (u < 1 || v < 1 || u > raw.num_vertices || v > raw.num_vertices) {
        throw input_error("vertex id out of range 1.." + std::to_string(raw.num_vertices),
                          line_no);
      }
      raw.edges.emplace_back(static_cast<vertex_t>(u - 1), static_cast<vertex_t>(v - 1));
      return;
    }
    throw input_error("unknown DIMACS line type '" + std::string(tokens.front()) + "'", line_no);
  });
  if (!have_header) throw input_error("missing 'p edge <n> <m>' line");
  if (declared_edges != raw.edges.size()) {
    raw.warnings.push_back("header declares " + std::to_string(declared_edges) +
                           " edges, file has " + std::to_string(raw.edges.size()));
  }
  raw.labels.reserve(raw.num_vertices);
  for (std::size_t v = 0; v < raw.num_vertices; ++v) raw.labels.push_back(std::to_string(v + 1));
  return raw;
}

TemporalNetwork parse_temporal(std::string_view text) {
  TemporalNetwork net;
  LabelMap labels;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || is_comment(tokens.front())) return;
    if (tokens.size() != 3) throw input_error("expected 'u v t'", line_no);
    double t = 0;
    if (!parse_number(tokens[2], t)) throw input_error("time is not a number", line_no);
    if (tokens[0] == tokens[1]) return;
    const vertex_t u = labels.intern(tokens[0], line_no);
    const vertex_t v = labels.intern(tokens[1], line_no);
    net.edges.push_back({u, v, t});
  });
  net.labels = labels.take();
  net.num_vertices = net.labels.size();
  return net;
}

PreparedGraph preprocess(const RawEdgeList& raw) {
  const std::size_t n = raw.num_vertices;
  std::vector<std::uint8_t> keep(n, 0);
  std::vector<StaticGraph::Edge> edges;

  if (raw.directed) {
    std::vector<std::pair<vertex_t, vertex_t>> arcs;
    arcs.reserve(raw.edges.size());
    for (const auto& [u, v] : raw.edges) {
      if (u != v) arcs.emplace_back(u, v);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    std::vector<std::uint64_t> offsets(n + 1, 0);
    std::vector<vertex_t> targets;
    targets.reserve(arcs.size());
    for (const auto& [u, v] : arcs) {
      ++offsets[u + 1];
      targets.push_back(v);
    }
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

    if (n > 0) {
      const auto comp = strong_components(n, offsets, targets);
      const std::size_t big = largest_component(comp);
      for (std::size_t v = 0; v < n; ++v) keep[v] = comp[v] == big ? 1 : 0;
      // Vertices left without a reciprocated pair stay as isolated vertices.
      for (const auto& [u, v] : arcs) {
        if (u < v && keep[u] && keep[v] &&
            std::binary_search(arcs.begin(), arcs.end(), std::make_pair(v, u))) {
          edges.emplace_back(u, v);
        }
      }
    }
  } else if (n > 0) {
    std::vector<StaticGraph::Edge> all;
    all.reserve(raw.edges.size());
    for (const auto& [u, v] : raw.edges) all.emplace_back(u, v);
    const StaticGraph g = StaticGraph::build(std::span<const StaticGraph::Edge>(all), n);
    std::vector<std::size_t> comp(n, std::numeric_limits<std::size_t>::max());
    std::size_t components = 0;
    std::vector<vertex_t> frontier;
    for (vertex_t root = 0; root < n; ++root) {
      if (comp[root] != std::numeric_limits<std::size_t>::max()) continue;
      comp[root] = components;
      frontier.assign(1, root);
      while (!frontier.empty()) {
        const vertex_t v = frontier.back();
        frontier.pop_back();
        for (vertex_t w : g.neighbors(v)) {
          if (comp[w] == std::numeric_limits<std::size_t>::max()) {
            comp[w] = components;
            frontier.push_back(w);
          }
        }
      }
      ++components;
    }
    const std::size_t big = largest_component(comp);
    for (std::size_t v = 0; v < n; ++v) keep[v] = comp[v] == big ? 1 : 0;
    for (vertex_t v = 0; v < n; ++v) {
      if (!keep[v]) continue;
      for (vertex_t w : g.neighbors(v)) {
        if (v < w) edges.emplace_back(v, w);
      }
    }
  }
  return assemble(raw, keep, edges);
}

std::string write_edge_list(const StaticGraph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    for (vertex_t w : g.neighbors(v)) {
      if (v < w) out << labels[v] << ' ' << labels[w] << '\n';
    }
  }
  return out.str();
}

InputFormat parse_format_name(std::string_view name) {
  if (name == "auto") return InputFormat::automatic;
  if (name == "edges") return InputFormat::edges;
  if (name == "dimacs") return InputFormat::dimacs;
  if (name == "temporal") return InputFormat::temporal;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

InputFormat detect_format(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  if (p.extension() == ".gz") p = p.stem();
  const auto ext = p.extension().string();
  if (ext == ".clq" || ext == ".dimacs" || ext == ".col") return InputFormat::dimacs;
  if (ext == ".temporal" || ext == ".tedges") return InputFormat::temporal;
  return InputFormat::edges;
}

std::string read_input(const std::filesystem::path& path) {
  if (path.extension() == ".gz") {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) throw input_error("cannot open " + path.string());
    std::string data;
    char buffer[1 << 16];
    int got = 0;
    while ((got = gzread(file, buffer, sizeof buffer)) > 0) data.append(buffer, got);
    const bool failed = got < 0;
    gzclose(file);
    if (failed) throw input_error("corrupt gzip stream in " + path.string());
    return data;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path.string());
  std::ostringstream data;
  data << in.rdbuf();
  return data.str();
}

bool label_less(std::string_view a, std::string_view b) {
  long long x = 0;
  long long y = 0;
  if (parse_number(a, x) && parse_number(b, y)) return x < y;
  return a < b;
}

}  // namespace mc
