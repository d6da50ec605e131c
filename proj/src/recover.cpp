#include "gccaut/recover.hpp"

#include <algorithm>
#include <numeric>

#include "gccaut/automorphism.hpp"
#include "gccaut/deadline.hpp"
#include "gccaut/errors.hpp"

namespace gccaut {

namespace {

/// Components of the complement graph, each sorted, ordered by least vertex.
/// Vertices of different join factors are always adjacent, so each component
/// lies inside one factor.
std::vector<std::vector<std::size_t>> complement_components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && comp[v] < 0 && !g.adjacent(u, v)) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

IrreducibleType dihedral_type(int k) {
  switch (k) {
    case 3: return IrreducibleType::make(Family::A, 2);
    case 4: return IrreducibleType::make(Family::B, 2);
    case 6: return IrreducibleType::make(Family::G, 2);
    default: return IrreducibleType::make(Family::I2, 2, k);
  }
}

bool isomorphic_to(const Graph& g, const CoxeterType& t, int m, const Deadline* deadline) {
  ComplexHandle cx = ComplexHandle::build(t, m);
  return find_isomorphism(g, cx.graph(), deadline).has_value();
}

IrreducibleType recover_factor(const Graph& g, int m, const Deadline* deadline) {
  const auto facets = maximal_cliques(g, deadline);
  const std::size_t rank = facets.front().size();
  for (const auto& f : facets)
    if (f.size() != rank) throw NotRecognized("complex is not pure");
  if (rank == 1) {
    if (g.size() != static_cast<std::size_t>(m + 1)) throw NotRecognized("rank-1 factor has the wrong size");
    return IrreducibleType::make(Family::A, 1);
  }
  if (rank == 2) {
    // Facet count (m+1)(mk+2)/2 strictly increases with k.
    const std::size_t twice = 2 * facets.size();
    const std::size_t mm = static_cast<std::size_t>(m);
    if (twice % (mm + 1) != 0) throw NotRecognized("facet count fits no dihedral type");
    const std::size_t q = twice / (mm + 1);
    if (q < 2 || (q - 2) % mm != 0 || (q - 2) / mm < 3) throw NotRecognized("facet count fits no dihedral type");
    return dihedral_type(static_cast<int>((q - 2) / mm));
  }
  for (const auto& t : irreducible_types_of_rank(static_cast<int>(rank))) {
    const std::size_t expected = static_cast<std::size_t>(m) * t.num_positive_roots() + rank;
    if (expected != g.size()) continue;
    if (isomorphic_to(g, CoxeterType{{t}}, m, deadline)) return t;
  }
  throw NotRecognized("no finite type of rank " + std::to_string(rank) + " matches");
}

}  // namespace

RecoveredType recover_type(const Graph& labelled, const Deadline* deadline) {
  if (labelled.size() == 0) throw NotRecognized("empty graph");
  Graph g = labelled;
  g.set_colours({});
  const auto facets = maximal_cliques(g, deadline);
  const std::size_t rank = facets.front().size();
  for (const auto& f : facets)
    if (f.size() != rank) throw NotRecognized("complex is not pure");

  // Link of a codimension-1 face: the common neighbours outside the face.
  Face ridge(facets.front().begin(), facets.front().end() - 1);
  std::size_t link_size = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (std::find(ridge.begin(), ridge.end(), v) != ridge.end()) continue;
    if (std::all_of(ridge.begin(), ridge.end(), [&](std::size_t u) { return g.adjacent(u, v); })) ++link_size;
  }
  if (link_size < 2) throw NotRecognized("codimension-1 link has fewer than two vertices");
  const int m = static_cast<int>(link_size) - 1;

  RecoveredType out{{}, m};
  for (const auto& comp : complement_components(g)) {
    poll(deadline);
    out.type.factors.push_back(recover_factor(g.induced(comp), m, deadline));
  }
  if (!isomorphic_to(g, out.type, m, deadline))
    throw NotRecognized("graph is not isomorphic to the complex of " + out.type.name());
  return out;
}

}  // namespace gccaut
