#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gccaut/colored_complex.hpp"
#include "gccaut/symmetry.hpp"
#include "gccaut/verify.hpp"

namespace gccaut {

using json = nlohmann::ordered_json;

/// {"vertices": [{"root", "color", "negative_simple"[, "factor"]}], "edges": [[u, v]]}.
/// Roots are in factor-local simple-root coordinates; integer coefficients
/// are numbers, irrational ones strings like "1+1√5". Dihedral roots are a
/// single "jπ/k" angle string.
json graph_json(const ComplexHandle& cx);
/// Undirected DOT with labels "±root^colour".
std::string graph_dot(const ComplexHandle& cx);
/// Reads the vertex count and edges back; labels are ignored.
/// Throws InvalidArgument on malformed input.
Graph graph_from_json(const json& j);

/// Label of a global vertex, e.g. "+(1,1)^2".
std::string vertex_label(const ComplexHandle& cx, std::size_t v);

json facets_json(const std::vector<Face>& facets);
json permutation_json(const Permutation& p);
json report_json(const VerifyReport& r);

}  // namespace gccaut
