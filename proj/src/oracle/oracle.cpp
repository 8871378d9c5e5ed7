#include "mc/oracle/oracle.hpp"

#include <algorithm>
#include <bit>

namespace mc::oracle {
namespace {

using Mask = std::uint64_t;

void check_vertices(std::size_t n, const OracleBudget& budget, std::size_t hard_limit) {
  if (n > budget.max_vertices || n > hard_limit) {
    throw budget_exceeded("oracle refuses " + std::to_string(n) + " vertices (budget " +
                          std::to_string(std::min(budget.max_vertices, hard_limit)) + ")");
  }
}

struct Enumerator {
  std::vector<Mask> neighbors;
  Mask best = 0;

  void expand(Mask clique, Mask candidates, Mask excluded) {
    if (candidates == 0) {
      if (excluded == 0 && std::popcount(clique) > std::popcount(best)) best = clique;
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
    Mask pool = candidates | excluded;
    int pivot = -1;
    int most = -1;
    while (pool != 0) {
      const int u = std::countr_zero(pool);
      pool &= pool - 1;
      const int c = std::popcount(candidates & neighbors[u]);
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    Mask branch = candidates & ~neighbors[pivot];
    while (branch != 0) {
      const int v = std::countr_zero(branch);
      const Mask bit = Mask{1} << v;
      branch &= branch - 1;
      expand(clique | bit, candidates & neighbors[v], excluded & neighbors[v]);
      candidates &= ~bit;
      excluded |= bit;
    }
  }
};

}  // namespace

std::size_t SimpleGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

std::size_t SimpleGraph::num_edges() const {
  std::size_t m = 0;
  for (std::size_t v = 0; v < n_; ++v) m += degree(v);
  return m / 2;
}

std::vector<std::size_t> max_clique(const SimpleGraph& g, const OracleBudget& budget) {
  const std::size_t n = g.size();
  check_vertices(n, budget, 64);
  Enumerator e;
  e.neighbors.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) e.neighbors[u] |= Mask{1} << v;
    }
  }
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  e.expand(0, all, 0);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if ((e.best >> v) & 1U) out.push_back(v);
  }
  return out;
}

std::size_t max_clique_size_by_subsets(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw budget_exceeded("subset scan refuses " + std::to_string(n) + " vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) adj[u] |= 1U << v;
    }
  }
  std::size_t best = 0;
  const std::uint32_t limit = 1U << n;
  for (std::uint32_t s = 1; s < limit; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t rest = s; rest != 0 && ok; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      ok = (s & ~(1U << v) & ~adj[v]) == 0;
    }
    if (ok) best = size;
  }
  return best;
}

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> core_numbers(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> core(n, 0);
  std::vector<std::size_t> degree(n);
  std::vector<bool> gone(n, false);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t level = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!gone[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    level = std::max(level, degree[pick]);
    core[pick] = level;
    gone[pick] = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (!gone[u] && g.adjacent(pick, u)) --degree[u];
    }
  }
  return core;
}

ReachMatrix reachability(std::size_t n, const std::vector<Contact>& contacts, bool strict,
                         const OracleBudget& budget) {
  check_vertices(n, budget, budget.max_vertices);
  if (contacts.size() > budget.max_temporal_edges) {
    throw budget_exceeded("oracle refuses " + std::to_string(contacts.size()) +
                          " temporal edges (budget " +
                          std::to_string(budget.max_temporal_edges) + ")");
  }
  // Contacts in ascending time, input order among equal times.
  std::vector<std::size_t> order(contacts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return contacts[a].time < contacts[b].time;
  });
  // follows(a, b): contact at position b may come right after the one at position a.
  auto follows = [&](std::size_t a, std::size_t b) {
    const Contact& x = contacts[order[a]];
    const Contact& y = contacts[order[b]];
    if (x.target != y.source) return false;
    return strict ? x.time < y.time : b > a;
  };

  ReachMatrix reach(n, std::vector<bool>(n, false));
  std::vector<bool> used(order.size());
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    reach[s][s] = true;
    std::fill(used.begin(), used.end(), false);
    stack.clear();
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (contacts[order[p]].source == s) {
        used[p] = true;
        stack.push_back(p);
      }
    }
    // Depth-first search over paths, identified by their last contact.
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      reach[s][contacts[order[p]].target] = true;
      for (std::size_t q = 0; q < order.size(); ++q) {
        if (!used[q] && follows(p, q)) {
          used[q] = true;
          stack.push_back(q);
        }
      }
    }
  }
  return reach;
}

std::vector<std::size_t> largest_scc(std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                                     const OracleBudget& budget) {
  check_vertices(n, budget, budget.max_vertices);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> frontier{s};
    reach[s][s] = true;
    while (!frontier.empty()) {
      const std::size_t v = frontier.back();
      frontier.pop_back();
      for (const auto& [a, b] : arcs) {
        if (a == v && !reach[s][b]) {
          reach[s][b] = true;
          frontier.push_back(b);
        }
      }
    }
  }
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> comp;
    for (std::size_t v = 0; v < n; ++v) {
      if (reach[s][v] && reach[v][s]) comp.push_back(v);
    }
    if (comp.size() > best.size()) best = comp;
  }
  return best;
}

}  // namespace mc::oracle
