#include "gccaut/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "gccaut/errors.hpp"

namespace gccaut {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<std::uint32_t> prefix)
    : degree_(degree),
      prefix_(std::move(prefix)),
      chain_(std::make_shared<Chain>()),
      once_(std::make_shared<std::once_flag>()) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw IncompatibleDegree("generator degree differs from group degree");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  for (auto p : prefix_)
    if (p >= degree) throw InvalidArgument("base point out of range");
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(*once_, [this] { build(*chain_); });
  return *chain_;
}

void PermGroup::rebuild_level(Level& l) const {
  l.orbit.assign(1, l.point);
  l.where.assign(degree_, -1);
  l.where[l.point] = 0;
  l.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (const auto& s : l.gens) {
      std::uint32_t y = s(l.orbit[k]);
      if (l.where[y] >= 0) continue;
      l.where[y] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(y);
      l.transversal.push_back(s * l.transversal[k]);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Chain& c, Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < c.levels.size(); ++i) {
    const Level& l = c.levels[i];
    auto idx = l.where[g(l.point)];
    if (idx < 0) return {std::move(g), i};
    g = l.transversal[idx].inverse() * g;
  }
  return {std::move(g), c.levels.size()};
}

namespace {

std::uint32_t first_moved(const Permutation& p) {
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (p(x) != x) return static_cast<std::uint32_t>(x);
  return 0;
}

}  // namespace

void PermGroup::build(Chain& c) const {
  auto& L = c.levels;
  for (auto p : prefix_) L.push_back(Level{p, {}, {}, {}, {}});
  for (const auto& g : gens_) {
    bool fixes_base = std::all_of(L.begin(), L.end(), [&](const Level& l) { return g(l.point) == l.point; });
    if (fixes_base) L.push_back(Level{first_moved(g), {}, {}, {}, {}});
  }
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (const auto& g : gens_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(L[j].point) == L[j].point;
      if (fixes) L[i].gens.push_back(g);
    }
    rebuild_level(L[i]);
  }

  // Level i is complete once every Schreier generator sifts through i+1...
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(L.size()) - 1;
  while (i >= 0) {
    bool added = false;
    for (std::size_t k = 0; k < L[i].orbit.size() && !added; ++k) {
      for (std::size_t gi = 0; gi < L[i].gens.size() && !added; ++gi) {
        const Level& lv = L[i];
        const Permutation& s = lv.gens[gi];
        Permutation sg = lv.transversal[lv.where[s(lv.orbit[k])]].inverse() * s * lv.transversal[k];
        if (sg.is_identity()) continue;
        auto [h, j] = sift(c, std::move(sg), i + 1);
        if (h.is_identity()) continue;
        if (j == L.size()) L.push_back(Level{first_moved(h), {}, {}, {}, {}});
        for (std::size_t l = i + 1; l <= j; ++l) {
          L[l].gens.push_back(h);
          rebuild_level(L[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
      }
    }
    if (!added) --i;
  }
}

std::uint64_t PermGroup::order() const {
  unsigned __int128 total = 1;
  for (const auto& l : chain().levels) {
    total *= l.orbit.size();
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ArithmeticError("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw IncompatibleDegree("permutation degree differs from group degree");
  return sift(chain(), p, 0).first.is_identity();
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  if (point >= degree_) throw InvalidArgument("point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<std::uint32_t> out{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      auto y = g(out[k]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup PermGroup::stabilizer(std::uint32_t point) const {
  PermGroup rebased(degree_, gens_, {point});
  const auto& L = rebased.chain().levels;
  if (L.size() < 2) return PermGroup(degree_, {});
  return PermGroup(degree_, L[1].gens);
}

std::vector<std::uint32_t> PermGroup::base() const {
  std::vector<std::uint32_t> out;
  for (const auto& l : chain().levels) out.push_back(l.point);
  return out;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (order() > limit) throw InvalidArgument("group too large to enumerate");
  const auto& L = chain().levels;
  std::vector<Permutation> out;
  auto rec = [&](auto&& self, std::size_t i, const Permutation& prefix) -> void {
    if (i == L.size()) {
      out.push_back(prefix);
      return;
    }
    for (const auto& t : L[i].transversal) self(self, i + 1, prefix * t);
  };
  rec(rec, 0, Permutation::identity(degree_));
  return out;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw IncompatibleDegree("groups act on different sets");
  for (const auto& x : h.generators())
    if (!g.contains(x)) return false;
  for (const auto& a : g.generators()) {
    const Permutation inv = a.inverse();
    for (const auto& x : h.generators())
      if (!h.contains(a * x * inv)) return false;
  }
  return true;
}

PermGroup intersection(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw IncompatibleDegree("groups act on different sets");
  const PermGroup& small = g.order() <= h.order() ? g : h;
  const PermGroup& large = g.order() <= h.order() ? h : g;
  std::vector<Permutation> gens;
  PermGroup current(g.degree(), {});
  for (const auto& e : small.elements()) {
    if (e.is_identity() || !large.contains(e) || current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(g.degree(), gens);
  }
  return current;
}

std::uint64_t subgroup_product_order(const PermGroup& g, const PermGroup& h) {
  return g.order() / intersection(g, h).order() * h.order();
}

bool same_group(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw IncompatibleDegree("groups act on different sets");
  for (const auto& x : h.generators())
    if (!g.contains(x)) return false;
  for (const auto& x : g.generators())
    if (!h.contains(x)) return false;
  return true;
}

}  // namespace gccaut
