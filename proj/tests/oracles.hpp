#pragma once

// Brute-force reference implementations. Deliberately naive and independent of
// the refinement search and the Schreier-Sims machinery they check.

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "gccaut/graph.hpp"
#include "gccaut/permutation.hpp"

namespace oracle {

using gccaut::Graph;
using gccaut::Permutation;

/// Every automorphism, by extending partial maps vertex by vertex.
inline std::vector<Permutation> all_automorphisms(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Permutation> out;
  std::vector<std::uint32_t> img(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      out.emplace_back(img);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(img[u], w);
      if (!ok) continue;
      used[w] = true;
      img[v] = static_cast<std::uint32_t>(w);
      self(self, v + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  return out;
}

/// The group generated by `gens`, by breadth-first closure.
inline std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = g * p;
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return seen;
}

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

/// Same graph with vertex v renamed p(v).
inline Graph relabel(const Graph& g, const Permutation& p) {
  Graph h(g.size());
  for (const auto& [u, v] : g.edges()) h.add_edge(p(u), p(v));
  return h;
}

}  // namespace oracle
