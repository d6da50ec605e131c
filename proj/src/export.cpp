#include "gccaut/export.hpp"

#include <sstream>

#include "gccaut/errors.hpp"

namespace gccaut {

namespace {

json root_json(const CoxeterSystem& s, std::size_t root) {
  json out = json::array();
  if (s.uses_angle_model()) {
    out.push_back(s.root_coordinate_strings(root).front());
    return out;
  }
  const Root& r = s.root(root);
  for (const auto& c : r.coords) {
    if (c.radical_part().is_zero() && c.rational_part().is_integer())
      out.push_back(c.rational_part().num());
    else
      out.push_back(c.to_label());
  }
  return out;
}

}  // namespace

std::string vertex_label(const ComplexHandle& cx, std::size_t v) {
  const auto [f, local] = cx.locate(v);
  const VertexSet& vs = cx.factor(f);
  const ColoredRoot& x = vs.vertex(local);
  return vs.system().root_label(x.root) + "^" + std::to_string(x.color);
}

json graph_json(const ComplexHandle& cx) {
  json vertices = json::array();
  for (std::size_t v = 0; v < cx.size(); ++v) {
    const auto [f, local] = cx.locate(v);
    const VertexSet& vs = cx.factor(f);
    const ColoredRoot& x = vs.vertex(local);
    json e = {{"root", root_json(vs.system(), x.root)},
              {"color", x.color},
              {"negative_simple", !vs.system().is_positive(x.root)}};
    if (!cx.is_irreducible()) e["factor"] = f;
    vertices.push_back(std::move(e));
  }
  json edges = json::array();
  for (const auto& [u, v] : cx.graph().edges()) edges.push_back({u, v});
  return {{"type", cx.system().type().name()}, {"m", cx.m()}, {"vertices", vertices}, {"edges", edges}};
}

std::string graph_dot(const ComplexHandle& cx) {
  std::ostringstream os;
  os << "graph \"" << cx.system().type().name() << " m=" << cx.m() << "\" {\n";
  for (std::size_t v = 0; v < cx.size(); ++v) os << "  " << v << " [label=\"" << vertex_label(cx, v) << "\"];\n";
  for (const auto& [u, v] : cx.graph().edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
      !j["edges"].is_array())
    throw InvalidArgument("graph JSON needs \"vertices\" and \"edges\" arrays");
  const std::size_t n = j["vertices"].size();
  Graph g(n);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InvalidArgument("edge must be a pair of vertex indices");
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= n || v >= n || u == v) throw InvalidArgument("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

json facets_json(const std::vector<Face>& facets) {
  json out = json::array();
  for (const auto& f : facets) out.push_back(f);
  return out;
}

json permutation_json(const Permutation& p) {
  json out = json::array();
  for (auto x : p.images()) out.push_back(x);
  return out;
}

json report_json(const VerifyReport& r) {
  json clauses = json::object();
  for (const auto& [name, ok] : r.clauses) clauses[name] = ok;
  return {{"type", r.type},          {"m", r.m},
          {"aut_order", r.aut_order}, {"predicted", r.predicted},
          {"clauses", clauses},       {"orbit_sizes", r.orbit_sizes}};
}

}  // namespace gccaut
