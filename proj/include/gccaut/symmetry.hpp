#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gccaut/colored_complex.hpp"

namespace gccaut {

enum class MapKind { R, S, T, Iota, Diagram, Canonical, Composite };

/// A named bijection of vertex indices. Endomaps are automorphisms of the
/// compatibility graph (validated by the factories below); Iota maps into the
/// complex with swapped bipartition.
struct VertexMap {
  MapKind kind = MapKind::Composite;
  std::string name;
  Permutation perm;
};

/// Throws NotAnAutomorphism unless p preserves adjacency of cx.
VertexMap checked_map(const ComplexHandle& cx, MapKind kind, std::string name, Permutation p);

// Case formulas on single coloured roots.
ColoredRoot map_S(const VertexSet& vs, const ColoredRoot& v);
ColoredRoot map_T(const VertexSet& vs, const ColoredRoot& v);
/// Image lives in the vertex set of the swapped bipartition (same roots).
ColoredRoot map_iota(const VertexSet& vs, const ColoredRoot& v);

/// Vertex permutation of a case formula, without the automorphism check.
Permutation tabulate(const VertexSet& vs, ColoredRoot (*f)(const VertexSet&, const ColoredRoot&));
/// iota as a bijection from vs onto `swapped`, by vertex index.
Permutation iota_map(const VertexSet& vs, const VertexSet& swapped);

/// Even maps keep colours; odd maps send positive alpha^i to D(alpha)^{m+1-i}.
/// Checks DR = RD (even) or DR = R^-1 D (odd); throws RelationViolation.
VertexMap diagram_map(const ComplexHandle& cx, const DiagramSymmetry& d);
/// The diagram map of rho -> -w0(rho); when h is even also checks C = R^{(mh+2)/2}.
VertexMap canonical_C(const ComplexHandle& cx);

struct DihedralGenerators {
  VertexMap R, S, T;
};

/// Checks S^2 = T^2 = Id, SRS = R^-1, ST = R^m and R^{mh+2} = Id.
/// Throws RelationViolation.
DihedralGenerators dihedral_generators(const ComplexHandle& cx);

struct RelationCheck {
  std::string name;
  bool holds = false;
};
/// The relation table printed by the CLI; never throws on a failed relation.
std::vector<RelationCheck> relation_checks(const ComplexHandle& cx);

/// c = w_black w_1 ... w_m w_white with w_j = w_{j,2} w_{j,1}.
struct CanonicalFactorization {
  GroupElement w_black, w_white;
  std::vector<GroupElement> w, w1, w2;  // index j-1 for colour j
};

/// Throws NotAFacet.
CanonicalFactorization canonical_factorization(const ComplexHandle& cx, const Face& f);
/// The factor identities relating f and S(f); false if any fails.
bool s_image_factor_identities(const ComplexHandle& cx, const Face& f);

/// (mh + 2) * omega. Throws RankTooSmall for rank 1, InvalidArgument if reducible.
std::uint64_t predicted_aut_order(const ComplexHandle& cx);

}  // namespace gccaut
