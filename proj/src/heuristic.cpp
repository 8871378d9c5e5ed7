#include "mc/heuristic.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace mc {
namespace {

std::vector<vertex_t> seed_order(const StaticGraph& g, const CoreDecomposition& cores) {
  std::vector<vertex_t> seeds;
  seeds.reserve(g.alive_count());
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (g.alive(v)) seeds.push_back(v);
  }
  std::sort(seeds.begin(), seeds.end(), [&](vertex_t a, vertex_t b) {
    if (cores.core[a] != cores.core[b]) return cores.core[a] > cores.core[b];
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return seeds;
}

class GreedyScan {
 public:
  GreedyScan(const StaticGraph& g, const CoreDecomposition& cores) : g_(g), cores_(cores) {}

  /// Runs seeds[first], seeds[first + stride], ... and returns the best clique.
  std::vector<vertex_t> run(std::span<const vertex_t> seeds, std::size_t first,
                            std::size_t stride, bool early_exit) {
    std::vector<vertex_t> best;
    std::size_t max = 0;
    for (std::size_t i = first; i < seeds.size(); i += stride) {
      const vertex_t v = seeds[i];
      if (early_exit && cores_.core[v] < max) break;
      candidates_.clear();
      for (vertex_t u : g_.neighbors(v)) {
        if (g_.alive(u) && cores_.core[u] > max) candidates_.push_back(u);
      }
      std::sort(candidates_.begin(), candidates_.end(), [&](vertex_t a, vertex_t b) {
        if (cores_.core[a] != cores_.core[b]) return cores_.core[a] > cores_.core[b];
        if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
        return a < b;
      });
      clique_.assign(1, v);
      for (vertex_t u : candidates_) {
        const bool fits = std::all_of(clique_.begin(), clique_.end(),
                                      [&](vertex_t w) { return g_.has_edge(u, w); });
        if (fits) clique_.push_back(u);
      }
      if (clique_.size() > max) {
        best = clique_;
        max = best.size();
      }
    }
    return best;
  }

 private:
  const StaticGraph& g_;
  const CoreDecomposition& cores_;
  std::vector<vertex_t> candidates_;
  std::vector<vertex_t> clique_;
};

}  // namespace

Clique heuristic_clique(const StaticGraph& g, const CoreDecomposition& cores,
                        const HeuristicOptions& options) {
  const auto seeds = seed_order(g, cores);
  GreedyScan scan(g, cores);
  return Clique::certify(g, scan.run(seeds, 0, 1, options.early_exit));
}

Clique heuristic_clique_parallel(const StaticGraph& g, const CoreDecomposition& cores,
                                 std::size_t workers) {
  if (workers == 0) throw std::invalid_argument("heuristic needs at least one worker");
  if (workers == 1) return heuristic_clique(g, cores);

  const auto seeds = seed_order(g, cores);
  std::vector<Clique> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          GreedyScan scan(g, cores);
          found[w] = Clique::certify(g, scan.run(seeds, w, workers, true));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const Clique* best = &found.front();
  for (const auto& c : found) {
    if (c.size() > best->size() ||
        (c.size() == best->size() &&
         std::lexicographical_compare(c.members().begin(), c.members().end(),
                                      best->members().begin(), best->members().end()))) {
      best = &c;
    }
  }
  return *best;
}

}  // namespace mc
