#include "mc/clique.hpp"

#include <algorithm>

namespace mc {

bool is_clique(const StaticGraph& g, std::span<const vertex_t> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.num_vertices()) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j] || !g.has_edge(members[i], members[j])) return false;
    }
  }
  return true;
}

Clique Clique::certify(const StaticGraph& g, std::vector<vertex_t> members) {
  std::sort(members.begin(), members.end());
  if (!is_clique(g, members)) throw internal_error("vertex set is not a clique");
  return Clique(std::move(members));
}

Clique Clique::relabeled(std::span<const vertex_t> ids) const {
  std::vector<vertex_t> out;
  out.reserve(members_.size());
  for (vertex_t v : members_) out.push_back(ids[v]);
  std::sort(out.begin(), out.end());
  return Clique(std::move(out));
}

}  // namespace mc
