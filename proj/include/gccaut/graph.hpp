#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gccaut/permutation.hpp"

namespace gccaut {

/// Simple undirected graph on {0, ..., n-1} stored as adjacency bit rows.
/// Optional vertex colours seed the refinement in automorphism search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t degree(std::size_t u) const;
  std::vector<std::uint32_t> neighbors(std::size_t u) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t num_edges() const;

  const std::vector<int>& colours() const noexcept { return colours_; }
  void set_colours(std::vector<int> c);

  /// Subgraph induced on `keep`, renumbered in the given order.
  Graph induced(const std::vector<std::size_t>& keep) const;
  /// True iff p preserves adjacency and colours.
  bool is_automorphism(const Permutation& p) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> colours_;
};

}  // namespace gccaut
