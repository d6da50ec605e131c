#pragma once

#include "gccaut/colored_complex.hpp"
#include "gccaut/coxeter_type.hpp"

namespace gccaut {

class Deadline;

struct RecoveredType {
  CoxeterType type;
  int m = 1;
};

/// Reads (W, m) off an unlabelled compatibility graph.
///
/// m comes from codimension-1 links (m+1 isolated vertices), the rank from the
/// clique number, factors from the components of the complement graph. Dihedral
/// factors are told apart by their facet count; larger ranks by vertex count.
/// Every answer is confirmed by an explicit isomorphism with the rebuilt
/// complex. Throws NotRecognized.
RecoveredType recover_type(const Graph& g, const Deadline* deadline = nullptr);
inline RecoveredType recover_type(const ComplexHandle& cx, const Deadline* deadline = nullptr) {
  return recover_type(cx.graph(), deadline);
}

}  // namespace gccaut
