#include "mc/temporal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "mc/parallel.hpp"

namespace mc {
namespace {

void check_ids(const TemporalNetwork& net) {
  for (const auto& e : net.edges) {
    if (e.source >= net.num_vertices || e.target >= net.num_vertices) {
      throw input_error("temporal edge endpoint out of range");
    }
  }
}

/// Edge indices sorted by (time, input position).
std::vector<std::size_t> time_sorted(const TemporalNetwork& net) {
  std::vector<std::size_t> idx(net.edges.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return net.edges[a].time < net.edges[b].time;
  });
  return idx;
}

}  // namespace

ReachabilityGraph::ReachabilityGraph(std::size_t n, std::vector<std::uint64_t> offsets,
                                     std::vector<vertex_t> targets)
    : offsets_(std::move(offsets)), targets_(std::move(targets)) {
  if (offsets_.size() != n + 1 || offsets_.back() != targets_.size()) {
    throw std::invalid_argument("malformed reachability graph layout");
  }
}

bool ReachabilityGraph::reaches(vertex_t u, vertex_t w) const noexcept {
  const auto out = reachable_from(u);
  return std::binary_search(out.begin(), out.end(), w);
}

std::vector<StaticGraph::Edge> ReachabilityGraph::reciprocal_pairs() const {
  std::vector<StaticGraph::Edge> pairs;
  for (vertex_t u = 0; u < num_vertices(); ++u) {
    for (vertex_t w : reachable_from(u)) {
      if (w > u && reaches(w, u)) pairs.emplace_back(u, w);
    }
  }
  return pairs;
}

StaticGraph ReachabilityGraph::reciprocal_graph() const {
  const auto pairs = reciprocal_pairs();
  return StaticGraph::build(std::span<const StaticGraph::Edge>(pairs), num_vertices());
}

ReachabilityGraph reach(const TemporalNetwork& net, const ReachOptions& options) {
  check_ids(net);
  const std::size_t n = net.num_vertices;
  const std::size_t words = (n + 63) / 64;
  const long double bitmap_bytes = static_cast<long double>(n) * words * 8;
  if (bitmap_bytes > static_cast<long double>(options.max_bitmap_bytes)) {
    throw capacity_error("reachability bitmaps need " +
                         std::to_string(static_cast<std::uint64_t>(bitmap_bytes)) +
                         " bytes, over the cap of " + std::to_string(options.max_bitmap_bytes));
  }

  std::vector<std::uint64_t> bits(n * words, 0);
  auto row = [&](std::size_t v) { return bits.data() + v * words; };
  for (std::size_t v = 0; v < n; ++v) row(v)[v / 64] |= std::uint64_t{1} << (v % 64);

  const auto sorted = time_sorted(net);
  auto merge = [&](std::uint64_t* into, const std::uint64_t* from) {
    for (std::size_t k = 0; k < words; ++k) into[k] |= from[k];
  };

  if (options.order == TimeOrder::input_order) {
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
      const auto& e = net.edges[*it];
      merge(row(e.source), row(e.target));
    }
  } else {
    // Contacts sharing a timestamp must all read the sets as they stood
    // before any of them was applied.
    std::vector<std::uint64_t> frozen;
    std::size_t end = sorted.size();
    while (end > 0) {
      std::size_t begin = end - 1;
      const double t = net.edges[sorted[begin]].time;
      while (begin > 0 && net.edges[sorted[begin - 1]].time == t) --begin;
      if (end - begin == 1) {
        const auto& e = net.edges[sorted[begin]];
        merge(row(e.source), row(e.target));
      } else {
        frozen.resize((end - begin) * words);
        for (std::size_t k = begin; k < end; ++k) {
          const auto* src = row(net.edges[sorted[k]].target);
          std::copy(src, src + words, frozen.data() + (k - begin) * words);
        }
        for (std::size_t k = begin; k < end; ++k) {
          merge(row(net.edges[sorted[k]].source), frozen.data() + (k - begin) * words);
        }
      }
      end = begin;
    }
  }

  std::uint64_t total = 0;
  for (std::uint64_t w : bits) total += static_cast<std::uint64_t>(std::popcount(w));
  if (total - n > options.max_reach_edges) {
    throw capacity_error("projected " + std::to_string(total - n) +
                         " reachability edges exceed the cap of " +
                         std::to_string(options.max_reach_edges));
  }

  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<vertex_t> targets;
  targets.reserve(total);
  for (std::size_t v = 0; v < n; ++v) {
    const auto* r = row(v);
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t word = r[k];
      while (word != 0) {
        targets.push_back(static_cast<vertex_t>(k * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    offsets[v + 1] = targets.size();
  }
  return ReachabilityGraph(n, std::move(offsets), std::move(targets));
}

TsccResult max_tscc(const TemporalNetwork& net, const SearchConfig& config,
                    const ReachOptions& options) {
  TsccResult out;
  const ReachabilityGraph reachability = reach(net, options);
  const auto pairs = reachability.reciprocal_pairs();
  out.reach_vertices = reachability.num_vertices();
  out.reach_edges = reachability.num_edges() - reachability.num_vertices();
  out.reciprocal_edges = pairs.size();

  const StaticGraph g =
      StaticGraph::build(std::span<const StaticGraph::Edge>(pairs), net.num_vertices);
  out.search = config.workers > 1 ? max_clique_parallel(g, config) : max_clique(g, config);
  out.members.assign(out.search.clique.members().begin(), out.search.clique.members().end());

  std::vector<std::uint8_t> in(net.num_vertices, 0);
  for (vertex_t v : out.members) in[v] = 1;
  for (const auto& e : net.edges) {
    if (in[e.source] && in[e.target]) out.induced_edges.push_back(e);
  }
  return out;
}

bool verify_component(const TemporalNetwork& net, std::span<const vertex_t> members,
                      TimeOrder order) {
  check_ids(net);
  for (vertex_t v : members) {
    if (v >= net.num_vertices) return false;
  }
  if (members.size() <= 1) return true;

  const auto sorted = time_sorted(net);
  // Arrival keys: the timestamp in strict mode, the sorted rank in input-order mode.
  std::vector<double> key(sorted.size());
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    key[r] = order == TimeOrder::strict ? net.edges[sorted[r]].time : static_cast<double>(r);
  }
  constexpr double kNever = std::numeric_limits<double>::infinity();
  std::vector<double> arrival(net.num_vertices);
  for (vertex_t source : members) {
    std::fill(arrival.begin(), arrival.end(), kNever);
    arrival[source] = -kNever;
    for (std::size_t r = 0; r < sorted.size(); ++r) {
      const auto& e = net.edges[sorted[r]];
      if (arrival[e.source] < key[r]) arrival[e.target] = std::min(arrival[e.target], key[r]);
    }
    for (vertex_t target : members) {
      if (arrival[target] == kNever) return false;
    }
  }
  return true;
}

}  // namespace mc
