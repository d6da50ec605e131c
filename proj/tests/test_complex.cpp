#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gccaut/automorphism.hpp"
#include "gccaut/colored_complex.hpp"
#include "gccaut/errors.hpp"
#include "gccaut/export.hpp"
#include "gccaut/recover.hpp"
#include "oracles.hpp"

using namespace gccaut;

namespace {

ComplexHandle cx_of(const char* name, int m) { return ComplexHandle::build(CoxeterType::parse(name), m); }

std::size_t vtx(const VertexSet& vs, std::vector<std::int64_t> coords, int color, bool negative = false) {
  ScalarVector v;
  for (auto c : coords) v.emplace_back(negative ? -c : c);
  auto r = vs.system().find_root(v);
  REQUIRE(r.has_value());
  return vs.index_of({*r, color});
}

struct Case {
  const char* type;
  int m;
};

// Rank <= 4, m <= 3, plus the dihedral models.
const Case kRuleCases[] = {{"A1", 1}, {"A1", 3}, {"A2", 1}, {"A2", 2}, {"A2", 3}, {"A3", 1}, {"A3", 2}, {"A3", 3},
                           {"A4", 1}, {"A4", 2}, {"B2", 1}, {"B2", 3}, {"B3", 1}, {"B3", 2}, {"B4", 1}, {"B4", 2},
                           {"D4", 1}, {"D4", 2}, {"D4", 3}, {"F4", 1}, {"G2", 1}, {"G2", 3}, {"H3", 1}, {"H3", 2},
                           {"H4", 1}, {"I2(5)", 1}, {"I2(5)", 3}, {"I2(7)", 2}};

}  // namespace

TEST_CASE("vertex counts and the A2 block layout") {
  for (const auto& c : kRuleCases) {
    const auto cx = cx_of(c.type, c.m);
    const auto& s = cx.vertex_set().system();
    CHECK(cx.size() == static_cast<std::size_t>(c.m) * s.num_positive() + s.rank());
  }
  // -beta | alpha | alpha+beta | beta | -alpha
  const auto cx = cx_of("A2", 1);
  const auto& vs = cx.vertex_set();
  CHECK(vs.block(vtx(vs, {0, 1}, 1, true)) == 0);
  CHECK(vs.block(vtx(vs, {1, 0}, 1)) == 1);
  CHECK(vs.block(vtx(vs, {1, 1}, 1)) == 2);
  CHECK(vs.block(vtx(vs, {0, 1}, 1)) == 3);
  CHECK(vs.block(vtx(vs, {1, 0}, 1, true)) == 4);
  CHECK_THROWS_AS(vs.index_of({vs.system().negative_of(2), 1}), InvalidArgument);
  CHECK_THROWS_AS(vs.index_of({0, 2}), InvalidArgument);  // colour above m
  CHECK_THROWS_AS(cx_of("A2", 0), InvalidArgument);
}

TEST_CASE("vertex index is the total order of factorizations") {
  for (const char* name : {"A3", "B3", "I2(5)"}) {
    const auto cx = cx_of(name, 2);
    const auto& vs = cx.vertex_set();
    for (std::size_t u = 0; u < vs.size(); ++u) {
      CHECK(block_index(vs, vs.vertex(u)) == vs.block(u));
      for (std::size_t v = 0; v < vs.size(); ++v)
        CHECK(tzanaki_compare(vs, vs.vertex(u), vs.vertex(v)) == (u <=> v));
    }
  }
}

TEST_CASE("compatibility: rules, orbit oracle, symmetry, R-invariance") {
  for (const auto& c : kRuleCases) {
    CAPTURE(c.type);
    CAPTURE(c.m);
    const auto cx = cx_of(c.type, c.m);
    const auto& vs = cx.vertex_set();
    const auto& R = vs.rotation();
    const CompatibilityRules compatible(vs);
    for (std::size_t u = 0; u < vs.size(); ++u)
      for (std::size_t v = 0; v < vs.size(); ++v) {
        if (u == v) continue;
        const bool rules = compatible(vs.vertex(u), vs.vertex(v));
        CHECK(rules == compatible_orbit(vs, vs.vertex(u), vs.vertex(v)));
        CHECK(rules == compatible(vs.vertex(v), vs.vertex(u)));
        CHECK(rules == cx.adjacent(u, v));
        CHECK(cx.adjacent(u, v) == cx.adjacent(R(u), R(v)));
        CHECK(rotation_R(vs, vs.vertex(u)) == vs.vertex(R(u)));
      }
  }
}

TEST_CASE("compatible pairs multiply to an element below c") {
  for (const char* name : {"A3", "B3", "D4", "H3"}) {
    const auto cx = cx_of(name, 2);
    const auto& vs = cx.vertex_set();
    const auto& s = vs.system();
    for (std::size_t u = 0; u < vs.size(); ++u)
      for (std::size_t v = u + 1; v < vs.size(); ++v)
        if (cx.adjacent(u, v))
          CHECK(s.absolute_leq_c(s.reflection(vs.vertex(v).root) * s.reflection(vs.vertex(u).root)));
  }
}

TEST_CASE("R shifts blocks by -h") {
  for (const auto& c : kRuleCases) {
    const auto cx = cx_of(c.type, c.m);
    const auto& vs = cx.vertex_set();
    const int B = vs.num_blocks(), h = vs.system().coxeter_number();
    for (std::size_t v = 0; v < vs.size(); ++v)
      CHECK(vs.block(vs.rotation()(v)) == ((vs.block(v) - h) % B + B) % B);
  }
}

TEST_CASE("a shift by -m is refuted on A2, m = 1") {
  // R(-alpha^1) = alpha^1 moves block 4 to block 1: a shift of -3 = -h, not -1.
  const auto cx = cx_of("A2", 1);
  const auto& vs = cx.vertex_set();
  const std::size_t neg_alpha = vtx(vs, {1, 0}, 1, true);
  CHECK(vs.rotation()(neg_alpha) == vtx(vs, {1, 0}, 1));
  CHECK(vs.block(vs.rotation()(neg_alpha)) != (vs.block(neg_alpha) - 1 + 5) % 5);
}

TEST_CASE("R-orbits") {
  for (const auto& c : kRuleCases) {
    const auto cx = cx_of(c.type, c.m);
    const auto& vs = cx.vertex_set();
    if (vs.system().rank() < 2) continue;
    const auto rep = r_orbit_report(vs);
    const std::size_t B = vs.num_blocks();
    std::size_t total = 0;
    for (const auto& o : rep.orbits) {
      total += o.size;
      if (2 * o.size == B) CHECK(o.negatives.size() == 1);
      else CHECK((o.size == B && o.negatives.size() == 2));
    }
    CHECK(total == vs.size());
    CHECK(2 * rep.order == B * rep.w0_order);
  }
  // A1: R is an (m+1)-cycle.
  CHECK(cx_of("A1", 3).vertex_set().rotation().order() == 4);
}

TEST_CASE("facets: factorization search, cliques and Fuss-Catalan agree") {
  CHECK(fuss_catalan(*cx_of("A2", 1).vertex_set().system_ptr(), 1) == 5);
  CHECK(fuss_catalan(*cx_of("A2", 2).vertex_set().system_ptr(), 2) == 12);
  CHECK(fuss_catalan(*cx_of("B2", 1).vertex_set().system_ptr(), 1) == 6);
  CHECK(fuss_catalan(cx_of("A1xA2", 1).system(), 1) == 10);
  const Case cases[] = {{"A1", 3}, {"A2", 1}, {"A2", 2}, {"A3", 1}, {"A3", 2}, {"B2", 1}, {"B2", 2},
                        {"B3", 1}, {"B3", 2}, {"G2", 1}, {"G2", 2}, {"D4", 1}, {"D4", 2}, {"H3", 1},
                        {"H3", 2}, {"A4", 2}, {"F4", 1}, {"I2(5)", 2}, {"I2(7)", 3}};
  for (const auto& c : cases) {
    CAPTURE(c.type);
    CAPTURE(c.m);
    const auto cx = cx_of(c.type, c.m);
    const auto tz = facets_tzanaki(cx, 2);
    CHECK(tz == facets_cliques(cx));
    CHECK(tz.size() == fuss_catalan(cx.system(), c.m));
    CHECK(tz == facets_tzanaki(cx, 1));  // independent of the thread count
  }
  CHECK(facets_tzanaki(cx_of("A3", 1)).size() == 14);
  CHECK(facets_tzanaki(cx_of("D4", 1)).size() == 50);
}

TEST_CASE("the complex is pure") {
  for (const Case& c : {Case{"A3", 2}, Case{"B3", 1}, Case{"H3", 1}, Case{"D4", 1}, Case{"A1xA2", 2}}) {
    const auto cx = cx_of(c.type, c.m);
    for (const auto& f : maximal_cliques(cx.graph())) CHECK(f.size() == static_cast<std::size_t>(cx.rank()));
  }
}

TEST_CASE("links") {
  const auto a2 = cx_of("A2", 1);
  const auto& vs = a2.vertex_set();
  const std::size_t na = vtx(vs, {1, 0}, 1, true), nb = vtx(vs, {0, 1}, 1, true), b = vtx(vs, {0, 1}, 1);
  const auto l = link(a2, {na});
  CHECK(l.vertices == std::vector<std::size_t>{std::min(nb, b), std::max(nb, b)});
  CHECK(l.graph.num_edges() == 0);
  REQUIRE(l.parabolic.has_value());
  CHECK(l.parabolic->system().type().name() == "A1");

  CHECK(link(a2, {}).vertices.size() == a2.size());
  CHECK(link(a2, {}).graph.num_edges() == a2.graph().num_edges());
  CHECK_THROWS_AS(link(a2, {na, vtx(vs, {1, 1}, 1)}), NotAFace);
  CHECK_THROWS_AS(link(a2, {99}), NotAFace);

  const auto a3 = cx_of("A3", 1);
  const auto mid = link(a3, {a3.vertex_set().index_of({a3.vertex_set().system().negative_of(1), 1})});
  CHECK(mid.graph.size() == 4);
  CHECK(mid.graph.num_edges() == 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(mid.graph.degree(v) == 2);
  CHECK(mid.parabolic->system().type().canonical_name() == CoxeterType::parse("A1xA1").canonical_name());
}

TEST_CASE("the link of a negative simple root is the parabolic complex") {
  for (const Case& c : {Case{"A3", 2}, Case{"B3", 1}, Case{"D4", 2}, Case{"H3", 1}, Case{"F4", 1}, Case{"A4", 1}}) {
    const auto cx = cx_of(c.type, c.m);
    const auto& vs = cx.vertex_set();
    for (int rho = 0; rho < vs.system().rank(); ++rho) {
      const auto l = link(cx, {vs.index_of({vs.system().negative_of(rho), 1})});
      REQUIRE(l.parabolic.has_value());
      const Graph& target = l.parabolic->graph();
      REQUIRE(l.bijection.size() == l.vertices.size());
      REQUIRE(target.size() == l.vertices.size());
      for (std::size_t i = 0; i < l.vertices.size(); ++i)
        for (std::size_t j = 0; j < l.vertices.size(); ++j)
          if (i != j) CHECK(l.graph.adjacent(i, j) == target.adjacent(l.bijection[i], l.bijection[j]));
    }
  }
}

TEST_CASE("automorphisms of joins are monomial") {
  for (const Case& c : {Case{"A1xA1", 1}, Case{"A1xA1", 2}, Case{"A1xA2", 1}, Case{"A2xA2", 1}}) {
    const auto cx = cx_of(c.type, c.m);
    for (const auto& p : oracle::all_automorphisms(cx.graph())) CHECK(factor_partition_check(cx, p));
  }
  const auto cx = cx_of("A1xA1", 1);
  CHECK(factor_partition_check(cx, Permutation::identity(4)));
  // Swapping two vertices of different factors breaks adjacency.
  CHECK_THROWS_AS(factor_partition_check(cx, Permutation({2, 1, 0, 3})), NotAnAutomorphism);
}

TEST_CASE("type recovery") {
  CHECK(recover_type(oracle::cycle(5)).type.name() == "A2");
  CHECK(recover_type(oracle::cycle(5)).m == 1);
  const auto b2 = recover_type(cx_of("B2", 2));
  CHECK(b2.type.name() == "B2");
  CHECK(b2.m == 2);
  const auto sq = recover_type(oracle::cycle(4));
  CHECK(sq.type.name() == "A1xA1");
  CHECK(sq.m == 1);
  // Dihedral types are separated by their facet count.
  CHECK(recover_type(oracle::cycle(7)).type.name() == "I2(5)");
  CHECK(recover_type(oracle::cycle(8)).type.name() == "G2");

  for (const Case& c : {Case{"A3", 2}, Case{"B3", 1}, Case{"H3", 1}, Case{"D4", 1}, Case{"A1xB3", 1},
                        Case{"A1", 4}, Case{"I2(9)", 2}, Case{"F4", 1}}) {
    const auto cx = cx_of(c.type, c.m);
    // Strip the labels and shuffle the vertex names.
    std::vector<std::uint32_t> img(cx.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint32_t>((i * 7 + 3) % img.size());
    if (std::set<std::uint32_t>(img.begin(), img.end()).size() != img.size()) std::iota(img.begin(), img.end(), 0);
    const auto r = recover_type(oracle::relabel(graph_from_json(graph_json(cx)), Permutation(img)));
    CHECK(r.type.canonical_name() == CoxeterType::parse(c.type).canonical_name());
    CHECK(r.m == c.m);
  }

  Graph two_triangles(6);
  for (std::size_t base : {0, 3})
    for (std::size_t i = 0; i < 3; ++i) two_triangles.add_edge(base + i, base + (i + 1) % 3);
  CHECK_THROWS_AS(recover_type(two_triangles), NotRecognized);
  Graph path(4);
  for (std::size_t i = 0; i < 3; ++i) path.add_edge(i, i + 1);
  CHECK_THROWS_AS(recover_type(path), NotRecognized);
  Graph house = oracle::cycle(5);
  house.add_edge(0, 2);
  CHECK_THROWS_AS(recover_type(house), NotRecognized);
  CHECK_THROWS_AS(recover_type(oracle::petersen()), NotRecognized);
}

TEST_CASE("graph export") {
  const auto cx = cx_of("A1xA1", 1);
  const auto j = graph_json(cx);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 4);
  CHECK(j["vertices"][0].contains("factor"));
  const auto a2 = graph_json(cx_of("A2", 1));
  CHECK(a2["vertices"][0]["negative_simple"] == true);
  CHECK(a2["vertices"][0]["root"] == json::array({0, -1}));
  CHECK(!a2["vertices"][0].contains("factor"));
  const auto h3 = graph_json(cx_of("H3", 1));
  bool irrational = false;
  for (const auto& v : h3["vertices"])
    for (const auto& c : v["root"]) irrational = irrational || c.is_string();
  CHECK(irrational);
  const auto dot = graph_dot(cx_of("A2", 1));
  CHECK(dot.find("graph") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') >= 5);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", 3}}), InvalidArgument);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", json::array({1, 2})}, {"edges", json::array({json::array({0, 5})})}}),
                  InvalidArgument);
}
