#include "gccaut/verify.hpp"

#include <algorithm>
#include <set>

#include "gccaut/automorphism.hpp"
#include "gccaut/deadline.hpp"
#include "gccaut/errors.hpp"

namespace gccaut {

bool VerifyReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.second; });
}

std::string VerifyReport::first_failure() const {
  for (const auto& [name, ok] : clauses)
    if (!ok) return name;
  return {};
}

void require_passed(const VerifyReport& report) {
  if (auto name = report.first_failure(); !name.empty())
    throw VerificationFailure(name, report.type + " m=" + std::to_string(report.m) + ": clause " + name + " failed");
}

std::vector<Permutation> predicted_stabilizer(const ComplexHandle& cx, int rho) {
  const VertexSet& vs = cx.vertex_set();
  const auto& s = vs.system();
  const std::size_t v = vs.index_of({s.negative_of(static_cast<std::size_t>(rho)), 1});
  const Permutation X = s.is_black(rho) ? tabulate(vs, map_T) : tabulate(vs, map_S);
  std::set<Permutation> out;
  for (const auto& d : s.diagram_symmetries()) {
    if (d.parity != Parity::Even) continue;
    Permutation D = diagram_map(cx, d).perm;
    if (D(v) != v) continue;
    out.insert(X * D);
    out.insert(std::move(D));
  }
  return {out.begin(), out.end()};
}

VerifyReport verify_main_theorem(const ComplexHandle& cx, const Deadline* deadline) {
  VerifyReport r;
  r.predicted = predicted_aut_order(cx);
  const VertexSet& vs = cx.vertex_set();
  const auto& sys = vs.system();
  const std::size_t n = cx.size();
  r.type = cx.system().type().name();
  r.m = cx.m();

  r.aut = graph_automorphisms(cx.graph(), deadline);
  r.aut_order = r.aut.order();
  r.clauses.emplace_back("aut_order", r.aut_order == r.predicted);

  const auto gens = dihedral_generators(cx);
  r.dih = PermGroup(n, {gens.R.perm, gens.S.perm, gens.T.perm});
  std::vector<Permutation> diag;
  for (const auto& d : sys.diagram_symmetries())
    if (!d.is_identity()) diag.push_back(diagram_map(cx, d).perm);
  r.diag = PermGroup(n, diag);

  bool dih_in = true;
  for (const auto& g : r.dih.generators()) dih_in = dih_in && r.aut.contains(g);
  r.clauses.emplace_back("dih_in_aut", dih_in);
  bool diag_in = true;
  for (const auto& g : diag) diag_in = diag_in && r.aut.contains(g);
  r.clauses.emplace_back("diag_in_aut", diag_in);
  poll(deadline);

  r.clauses.emplace_back("product", subgroup_product_order(r.dih, r.diag) == r.aut_order);
  const PermGroup meet = intersection(r.dih, r.diag);
  const PermGroup c_group(n, {canonical_C(cx).perm});
  r.clauses.emplace_back("intersection", same_group(meet, c_group));
  r.clauses.emplace_back("dih_normal", is_normal(r.aut, r.dih));
  poll(deadline);

  bool orbits_ok = true;
  try {
    const ROrbitReport rep = r_orbit_report(vs);
    // |R| = (mh+2)/2 * |C|, kept integral.
    orbits_ok = 2 * rep.order == static_cast<std::uint64_t>(vs.num_blocks()) * rep.w0_order;
  } catch (const LemmaViolation&) {
    orbits_ok = false;
  }
  r.clauses.emplace_back("r_orbits", orbits_ok);

  bool stab_ok = true;
  for (int rho = 0; rho < sys.rank(); ++rho) {
    const auto v = static_cast<std::uint32_t>(vs.index_of({sys.negative_of(static_cast<std::size_t>(rho)), 1}));
    const PermGroup stab = r.aut.stabilizer(v);
    const auto expected = predicted_stabilizer(cx, rho);
    stab_ok = stab_ok && stab.order() == expected.size();
    for (const auto& p : expected) stab_ok = stab_ok && stab.contains(p);
  }
  r.clauses.emplace_back("stabilizers", stab_ok);

  const auto rel = relation_checks(cx);
  r.clauses.emplace_back("relations", std::all_of(rel.begin(), rel.end(), [](const auto& c) { return c.holds; }));

  std::vector<bool> seen(n, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    const auto orb = r.aut.orbit(v);
    for (auto u : orb) seen[u] = true;
    r.orbit_sizes.push_back(orb.size());
  }
  return r;
}

}  // namespace gccaut
