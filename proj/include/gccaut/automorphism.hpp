#pragma once

#include <optional>

#include "gccaut/graph.hpp"
#include "gccaut/perm_group.hpp"

namespace gccaut {

class Deadline;

/// Full automorphism group of a (vertex-coloured) graph.
///
/// Colour refinement to an equitable partition, individualization of the
/// first vertex of the smallest non-singleton cell, and a search of each
/// sibling subtree for a leaf equivalent to the first leaf. Siblings already
/// in the orbit of the first-path vertex under the automorphisms found so far
/// are skipped. Every returned generator is verified on the graph.
PermGroup graph_automorphisms(const Graph& g, const Deadline* deadline = nullptr);

/// An isomorphism a -> b (as the image array of a's vertices), if any.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b, const Deadline* deadline = nullptr);

}  // namespace gccaut
