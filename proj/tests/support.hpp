#pragma once

// Hand-rolled generators and converters shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mc/graph.hpp"
#include "mc/oracle/oracle.hpp"
#include "mc/temporal.hpp"

namespace support {

using Edges = std::vector<mc::StaticGraph::Edge>;

struct Instance {
  std::string name;
  std::size_t n = 0;
  Edges edges;
};

inline Edges gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Edges e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return e;
}

inline mc::StaticGraph make_graph(const Instance& in) {
  return mc::StaticGraph::build(std::span<const mc::StaticGraph::Edge>(in.edges), in.n);
}

inline mc::StaticGraph make_graph(std::size_t n, const Edges& edges) {
  return mc::StaticGraph::build(std::span<const mc::StaticGraph::Edge>(edges), n);
}

/// Oracle view of the alive subgraph (dead vertices become isolated).
inline mc::oracle::SimpleGraph to_oracle(const mc::StaticGraph& g) {
  mc::oracle::SimpleGraph s(g.num_vertices());
  for (mc::vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (!g.alive(v)) continue;
    for (mc::vertex_t w : g.neighbors(v)) {
      if (g.alive(w)) s.add_edge(v, w);
    }
  }
  return s;
}

inline mc::oracle::SimpleGraph to_oracle(std::size_t n, const Edges& edges) {
  mc::oracle::SimpleGraph s(n);
  for (const auto& [u, v] : edges) s.add_edge(u, v);
  return s;
}

inline Edges complete(std::size_t n, std::size_t offset = 0) {
  Edges e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u + offset, v + offset);
  }
  return e;
}

inline Instance petersen() {
  Instance in{"petersen", 10, {}};
  for (std::size_t i = 0; i < 5; ++i) {
    in.edges.emplace_back(i, (i + 1) % 5);
    in.edges.emplace_back(i, i + 5);
    in.edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return in;
}

inline Instance cycle(std::size_t n) {
  Instance in{"cycle" + std::to_string(n), n, {}};
  for (std::size_t i = 0; i < n; ++i) in.edges.emplace_back(i, (i + 1) % n);
  return in;
}

inline Instance complete_bipartite(std::size_t a, std::size_t b) {
  Instance in{"bipartite" + std::to_string(a) + "x" + std::to_string(b), a + b, {}};
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) in.edges.emplace_back(u, a + v);
  }
  return in;
}

/// K_k with `pendants` extra vertices, each hanging off one clique vertex.
inline Instance clique_with_pendants(std::size_t k, std::size_t pendants) {
  Instance in{"clique" + std::to_string(k) + "+" + std::to_string(pendants), k + pendants,
              complete(k)};
  for (std::size_t i = 0; i < pendants; ++i) in.edges.emplace_back(i % k, k + i);
  return in;
}

/// Structured instances of the exactness suite.
inline std::vector<Instance> structured_suite() {
  std::vector<Instance> out;
  out.push_back(petersen());
  for (std::size_t n : {3, 4, 5, 7, 12}) out.push_back(cycle(n));
  out.push_back(complete_bipartite(3, 3));
  out.push_back(complete_bipartite(5, 7));
  out.push_back(complete_bipartite(1, 9));
  out.push_back(complete_bipartite(10, 10));
  for (auto [k, p] : {std::pair{2, 3}, {4, 4}, {5, 1}, {6, 10}, {9, 9}, {12, 20}, {20, 5}}) {
    out.push_back(clique_with_pendants(k, p));
  }
  {
    // Two cliques sharing one vertex.
    Instance in{"bowtie6", 11, complete(6)};
    for (const auto& [u, v] : complete(6, 5)) in.edges.emplace_back(u, v);
    out.push_back(in);
  }
  {
    // Disjoint K_4, K_5, K_3 plus isolated vertices.
    Instance in{"disjoint", 15, complete(4)};
    for (const auto& e : complete(5, 4)) in.edges.push_back(e);
    for (const auto& e : complete(3, 9)) in.edges.push_back(e);
    out.push_back(in);
  }
  out.push_back(Instance{"empty", 0, {}});
  out.push_back(Instance{"edgeless", 6, {}});
  return out;
}

/// 200+ random G(n, p), n <= 40, p cycling through 0.1..0.9.
inline std::vector<Instance> random_suite(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 40;
    const double p = 0.1 * static_cast<double>(1 + i % 9);
    out.push_back(Instance{"gnp" + std::to_string(i), n, gnp(n, p, rng)});
  }
  return out;
}

inline mc::TemporalNetwork random_temporal(std::size_t n, std::size_t m, std::size_t distinct_times,
                                           std::mt19937_64& rng) {
  mc::TemporalNetwork net;
  net.num_vertices = n;
  for (std::size_t v = 0; v < n; ++v) net.labels.push_back(std::to_string(v));
  if (n < 2) return net;
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<mc::vertex_t>(rng() % n);
    auto v = static_cast<mc::vertex_t>(rng() % (n - 1));
    if (v >= u) ++v;
    net.edges.push_back({u, v, static_cast<double>(rng() % distinct_times)});
  }
  return net;
}

inline std::vector<mc::oracle::Contact> to_contacts(const mc::TemporalNetwork& net) {
  std::vector<mc::oracle::Contact> out;
  for (const auto& e : net.edges) out.push_back({e.source, e.target, e.time});
  return out;
}

/// True iff reach() and the oracle matrix agree on every ordered pair.
inline bool same_reachability(const mc::ReachabilityGraph& r, const mc::oracle::ReachMatrix& o) {
  if (r.num_vertices() != o.size()) return false;
  for (mc::vertex_t u = 0; u < o.size(); ++u) {
    std::size_t count = 0;
    for (mc::vertex_t w = 0; w < o.size(); ++w) {
      if (o[u][w] != r.reaches(u, w)) return false;
      count += o[u][w] ? 1 : 0;
    }
    if (count != r.reachable_from(u).size()) return false;
  }
  return true;
}

}  // namespace support
