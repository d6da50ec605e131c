#include "gccaut/graph.hpp"

#include <bit>

#include "gccaut/errors.hpp"

namespace gccaut {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loops are not allowed");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[u * words_ + w]);
  return d;
}

std::vector<std::uint32_t> Graph::neighbors(std::size_t u) const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[u * words_ + w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (auto v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::num_edges() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

void Graph::set_colours(std::vector<int> c) {
  if (!c.empty() && c.size() != n_) throw InvalidArgument("colour vector has wrong length");
  colours_ = std::move(c);
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
  Graph g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) g.add_edge(i, j);
  if (!colours_.empty()) {
    std::vector<int> c;
    for (auto v : keep) c.push_back(colours_[v]);
    g.colours_ = std::move(c);
  }
  return g;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != n_) return false;
  if (!colours_.empty())
    for (std::size_t v = 0; v < n_; ++v)
      if (colours_[v] != colours_[p(v)]) return false;
  for (std::size_t u = 0; u < n_; ++u) {
    if (degree(u) != degree(p(u))) return false;
    for (auto v : neighbors(u))
      if (!adjacent(p(u), p(v))) return false;
  }
  return true;
}

}  // namespace gccaut
