#pragma once

#include <span>
#include <vector>

#include "mc/graph.hpp"

namespace mc {

/// A vertex set known to be pairwise adjacent. Members are kept sorted.
class Clique {
 public:
  Clique() = default;

  /// Throws internal_error unless every pair of `members` is adjacent in `g`.
  static Clique certify(const StaticGraph& g, std::vector<vertex_t> members);

  /// Same members renamed through `ids` (e.g. snapshot -> input ids). Adjacency
  /// is not rechecked; the caller guarantees `ids` is an isomorphic relabeling.
  Clique relabeled(std::span<const vertex_t> ids) const;

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const vertex_t> members() const noexcept { return members_; }

  friend bool operator==(const Clique&, const Clique&) = default;

 private:
  explicit Clique(std::vector<vertex_t> members) : members_(std::move(members)) {}
  std::vector<vertex_t> members_;
};

/// True if every pair of `members` is adjacent in `g` and there are no repeats.
bool is_clique(const StaticGraph& g, std::span<const vertex_t> members);

}  // namespace mc
