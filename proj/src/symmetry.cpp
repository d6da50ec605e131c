#include "gccaut/symmetry.hpp"

#include <algorithm>

#include "gccaut/errors.hpp"

namespace gccaut {

VertexMap checked_map(const ComplexHandle& cx, MapKind kind, std::string name, Permutation p) {
  if (!cx.graph().is_automorphism(p)) throw NotAnAutomorphism(name + " does not preserve compatibility");
  return VertexMap{kind, std::move(name), std::move(p)};
}

ColoredRoot map_S(const VertexSet& vs, const ColoredRoot& v) {
  const auto& s = vs.system();
  const int m = vs.m();
  if (!s.is_positive(v.root)) {
    int rho = *s.negative_simple_index(v.root);
    if (!s.is_black(rho)) return v;                   // (i)
    return {s.negative_of(v.root), m};                // (ii)
  }
  auto simple = s.simple_index(v.root);
  if (simple && s.is_black(*simple)) {
    if (v.color == m) return {s.negative_of(v.root), 1};  // (ii')
    return {v.root, m - v.color};                         // (iii)
  }
  return {s.c_black()(v.root), m + 1 - v.color};  // (iv)
}

ColoredRoot map_T(const VertexSet& vs, const ColoredRoot& v) {
  const auto& s = vs.system();
  const int m = vs.m();
  if (!s.is_positive(v.root)) {
    int rho = *s.negative_simple_index(v.root);
    if (s.is_black(rho)) return v;         // (i)
    return {s.negative_of(v.root), 1};     // (ii)
  }
  auto simple = s.simple_index(v.root);
  if (simple && !s.is_black(*simple)) {
    if (v.color == 1) return {s.negative_of(v.root), 1};  // (ii)
    return {v.root, m + 2 - v.color};                     // (iii)
  }
  return {s.c_white()(v.root), m + 1 - v.color};  // (iv)
}

ColoredRoot map_iota(const VertexSet& vs, const ColoredRoot& v) {
  if (!vs.system().is_positive(v.root)) return v;
  return {v.root, vs.m() + 1 - v.color};
}

Permutation tabulate(const VertexSet& vs, ColoredRoot (*f)(const VertexSet&, const ColoredRoot&)) {
  std::vector<Permutation::value_type> img(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v)
    img[v] = static_cast<Permutation::value_type>(vs.index_of(f(vs, vs.vertex(v))));
  return Permutation(std::move(img));
}

Permutation iota_map(const VertexSet& vs, const VertexSet& swapped) {
  if (vs.size() != swapped.size() || vs.m() != swapped.m()) throw IncompatibleDegree("vertex sets differ in size");
  std::vector<Permutation::value_type> img(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v)
    img[v] = static_cast<Permutation::value_type>(swapped.index_of(map_iota(vs, vs.vertex(v))));
  return Permutation(std::move(img));
}

namespace {

std::string diagram_name(const DiagramSymmetry& d) {
  std::string s = "D[";
  for (std::size_t i = 0; i < d.map.size(); ++i) s += (i ? "," : "") + std::to_string(d.map[i]);
  return s + "]";
}

Permutation extend_diagram(const VertexSet& vs, const DiagramSymmetry& d) {
  const auto& s = vs.system();
  if (d.parity == Parity::Mixed || s.parity_of(d.map) != d.parity)
    throw InvalidDiagramSymmetry("diagram symmetry neither preserves nor swaps the bipartition");
  const Permutation roots = s.induced_root_map(d);
  const int m = vs.m();
  std::vector<Permutation::value_type> img(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const auto& x = vs.vertex(v);
    int color = x.color;
    if (s.is_positive(x.root) && d.parity == Parity::Odd) color = m + 1 - x.color;
    img[v] = static_cast<Permutation::value_type>(vs.index_of({roots(x.root), color}));
  }
  return Permutation(std::move(img));
}

}  // namespace

VertexMap diagram_map(const ComplexHandle& cx, const DiagramSymmetry& d) {
  const VertexSet& vs = cx.vertex_set();
  VertexMap out = checked_map(cx, MapKind::Diagram, diagram_name(d), extend_diagram(vs, d));
  const Permutation& R = vs.rotation();
  const Permutation rhs = d.parity == Parity::Even ? R * out.perm : R.inverse() * out.perm;
  if (out.perm * R != rhs)
    throw RelationViolation(out.name + (d.parity == Parity::Even ? ": DR != RD" : ": DR != R^-1 D"));
  return out;
}

VertexMap canonical_C(const ComplexHandle& cx) {
  const VertexSet& vs = cx.vertex_set();
  VertexMap out = diagram_map(cx, vs.system().canonical_diagram_map());
  out.kind = MapKind::Canonical;
  out.name = "C";
  if (vs.system().coxeter_number() % 2 == 0 && out.perm != vs.rotation().pow(vs.num_blocks() / 2))
    throw RelationViolation("C != R^((mh+2)/2)");
  return out;
}

std::vector<RelationCheck> relation_checks(const ComplexHandle& cx) {
  const VertexSet& vs = cx.vertex_set();
  const auto& s = vs.system();
  const Permutation& R = vs.rotation();
  const Permutation S = tabulate(vs, map_S);
  const Permutation T = tabulate(vs, map_T);
  const Permutation id = Permutation::identity(vs.size());
  const int m = vs.m();
  std::vector<RelationCheck> out;
  out.push_back({"R is an automorphism", cx.graph().is_automorphism(R)});
  out.push_back({"S is an automorphism", cx.graph().is_automorphism(S)});
  out.push_back({"T is an automorphism", cx.graph().is_automorphism(T)});
  out.push_back({"S∘S = Id", S * S == id});
  out.push_back({"T∘T = Id", T * T == id});
  out.push_back({"S∘R∘S = R⁻¹", S * R * S == R.inverse()});
  out.push_back({"S∘T = R^m", S * T == R.pow(m)});
  out.push_back({"R^(mh+2) = Id", R.pow(vs.num_blocks()).is_identity()});
  const Permutation C = extend_diagram(vs, s.canonical_diagram_map());
  if (s.coxeter_number() % 2 == 0) out.push_back({"C = R^((mh+2)/2)", C == R.pow(vs.num_blocks() / 2)});

  auto swapped_sys = std::make_shared<const CoxeterSystem>(s.with_swapped_bipartition());
  const VertexSet sw = VertexSet::build(swapped_sys, m);
  const Permutation iota = iota_map(vs, sw);
  const Permutation iota_back = iota_map(sw, vs);
  out.push_back({"ι̌∘ι = Id", iota_back * iota == id});
  // Conjugation by iota inverts the rotation: iota R iota = Ř^-1.
  out.push_back({"ι∘R∘ι̌ = Ř⁻¹", iota * R * iota_back == sw.rotation().inverse()});
  out.push_back({"ι̌∘Š∘ι = T", iota_back * tabulate(sw, map_S) * iota == T});
  out.push_back({"ι∘S∘ι̌ = Ť", iota * S * iota_back == tabulate(sw, map_T)});

  for (const auto& d : s.diagram_symmetries()) {
    if (d.is_identity()) continue;
    const Permutation D = extend_diagram(vs, d);
    const std::string name = diagram_name(d);
    out.push_back({name + " is an automorphism", cx.graph().is_automorphism(D)});
    if (d.parity == Parity::Even) {
      out.push_back({name + "∘R = R∘" + name, D * R == R * D});
      out.push_back({name + "∘S = S∘" + name, D * S == S * D});
    } else {
      out.push_back({name + "∘R = R⁻¹∘" + name, D * R == R.inverse() * D});
    }
  }
  return out;
}

DihedralGenerators dihedral_generators(const ComplexHandle& cx) {
  const VertexSet& vs = cx.vertex_set();
  DihedralGenerators g{checked_map(cx, MapKind::R, "R", vs.rotation()),
                       checked_map(cx, MapKind::S, "S", tabulate(vs, map_S)),
                       checked_map(cx, MapKind::T, "T", tabulate(vs, map_T))};
  const Permutation& R = g.R.perm;
  const Permutation& S = g.S.perm;
  const Permutation& T = g.T.perm;
  if (!(S * S).is_identity()) throw RelationViolation("S∘S != Id");
  if (!(T * T).is_identity()) throw RelationViolation("T∘T != Id");
  if (S * R * S != R.inverse()) throw RelationViolation("S∘R∘S != R^-1");
  if (S * T != R.pow(vs.m())) throw RelationViolation("S∘T != R^m");
  if (!R.pow(vs.num_blocks()).is_identity()) throw RelationViolation("R^(mh+2) != Id");
  return g;
}

CanonicalFactorization canonical_factorization(const ComplexHandle& cx, const Face& f) {
  const VertexSet& vs = cx.vertex_set();
  const auto& s = vs.system();
  if (static_cast<int>(f.size()) != s.rank()) throw NotAFacet("a facet has exactly n vertices");
  Face desc = f;
  std::sort(desc.rbegin(), desc.rend());
  if (std::adjacent_find(desc.begin(), desc.end()) != desc.end()) throw NotAFacet("repeated vertex");
  for (auto v : desc)
    if (v >= vs.size()) throw NotAFacet("vertex out of range");
  for (std::size_t i = 0; i < desc.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!cx.adjacent(desc[i], desc[j])) throw NotAFacet("vertices are not pairwise compatible");

  const int m = vs.m();
  CanonicalFactorization out{s.identity(), s.identity(), std::vector<GroupElement>(m, s.identity()),
                             std::vector<GroupElement>(m, s.identity()), std::vector<GroupElement>(m, s.identity())};
  GroupElement product = s.identity();
  for (auto v : desc) {
    const auto& x = vs.vertex(v);
    const GroupElement& t = s.reflection(x.root);
    product = product * t;
    if (!s.is_positive(x.root)) {
      GroupElement& w = s.is_black(*s.negative_simple_index(x.root)) ? out.w_black : out.w_white;
      w = w * t;
      continue;
    }
    auto simple = s.simple_index(x.root);
    out.w[x.color - 1] = out.w[x.color - 1] * t;
    GroupElement& part = (simple && s.is_black(*simple)) ? out.w1[x.color - 1] : out.w2[x.color - 1];
    part = part * t;
  }
  if (product != s.c()) throw NotAFacet("decreasing reflection product is not c");
  return out;
}

bool s_image_factor_identities(const ComplexHandle& cx, const Face& f) {
  const VertexSet& vs = cx.vertex_set();
  const auto& s = vs.system();
  const int m = vs.m();
  const auto F = canonical_factorization(cx, f);
  Face image;
  for (auto v : f) image.push_back(vs.index_of(map_S(vs, vs.vertex(v))));
  std::sort(image.begin(), image.end());
  CanonicalFactorization G;
  try {
    G = canonical_factorization(cx, image);
  } catch (const NotAFacet&) {
    return false;
  }
  const GroupElement& cb = s.c_black();
  bool ok = G.w_white == F.w_white && G.w_black == F.w1[m - 1] && G.w1[m - 1] == F.w_black;
  for (int i = 1; i <= m - 1; ++i) ok = ok && G.w1[i - 1] == F.w1[m - i - 1];
  for (int i = 1; i <= m; ++i) ok = ok && G.w2[i - 1] == cb * F.w2[m - i].inverse() * cb;
  GroupElement total = G.w_black;
  for (int j = 0; j < m; ++j) total = total * G.w[j];
  return ok && total * G.w_white == s.c();
}

std::uint64_t predicted_aut_order(const ComplexHandle& cx) {
  if (!cx.is_irreducible()) throw InvalidArgument("irreducible system required");
  if (cx.rank() < 2) throw RankTooSmall("rank ≥ 2 required");
  const VertexSet& vs = cx.vertex_set();
  return static_cast<std::uint64_t>(vs.num_blocks()) * vs.system().diagram_symmetries().size();
}

}  // namespace gccaut
