#include "gccaut/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "gccaut/deadline.hpp"
#include "gccaut/errors.hpp"

namespace gccaut {

namespace {

using Colouring = std::vector<int>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), nbr_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) nbr_[v] = g.neighbors(v);
  }

  /// Canonical relabelling of raw colour values to 0..k-1 in value order.
  Colouring normalise(const std::vector<int>& raw) const {
    std::vector<int> values = raw;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Colouring out(raw.size());
    for (std::size_t v = 0; v < raw.size(); ++v)
      out[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), raw[v]) - values.begin());
    return out;
  }

  /// Iterate (own colour, sorted neighbour colours) to a fixpoint. The new
  /// colour is the rank of the signature, so the result is isomorphism-invariant.
  Colouring refine(Colouring col) const {
    const std::size_t n = g_.size();
    col = normalise(col);  // cell count below must be exact, not max+1 of a gappy colouring
    std::size_t cells = count(col);
    std::vector<std::vector<int>> sig(n);
    std::vector<std::size_t> order(n);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(col[v]);
        for (auto u : nbr_[v]) s.push_back(col[u]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      Colouring next(n);
      int c = -1;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 || sig[order[k]] != sig[order[k - 1]]) ++c;
        next[order[k]] = c;
      }
      std::size_t next_cells = static_cast<std::size_t>(c + 1);
      col = std::move(next);
      if (next_cells == cells) return col;
      cells = next_cells;
    }
  }

  Colouring individualise(const Colouring& col, std::size_t v) const {
    Colouring out(col.size());
    for (std::size_t u = 0; u < col.size(); ++u) out[u] = 2 * col[u];
    out[v] += 1;
    return refine(std::move(out));
  }

  static std::size_t count(const Colouring& col) {
    if (col.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(col.begin(), col.end()) + 1);
  }

  /// Hash of cell sizes and the quotient matrix of an equitable colouring.
  std::uint64_t invariant(const Colouring& col) const {
    const std::size_t k = count(col);
    std::vector<std::size_t> size(k, 0), rep(k, 0);
    for (std::size_t v = col.size(); v-- > 0;) {
      ++size[col[v]];
      rep[col[v]] = v;
    }
    std::uint64_t h = k;
    std::vector<std::size_t> row(k);
    for (std::size_t c = 0; c < k; ++c) {
      h = mix(h, size[c]);
      std::fill(row.begin(), row.end(), 0);
      for (auto u : nbr_[rep[c]]) ++row[col[u]];
      for (std::size_t d = 0; d < k; ++d)
        if (row[d]) h = mix(mix(h, d), row[d]);
    }
    return h;
  }

  /// Smallest non-singleton cell, lowest colour first. Empty if discrete.
  static std::vector<std::size_t> target_cell(const Colouring& col) {
    const std::size_t k = count(col);
    std::vector<std::size_t> size(k, 0);
    for (int c : col) ++size[c];
    std::size_t best = k;
    for (std::size_t c = 0; c < k; ++c)
      if (size[c] > 1 && (best == k || size[c] < size[best])) best = c;
    std::vector<std::size_t> cell;
    if (best == k) return cell;
    for (std::size_t v = 0; v < col.size(); ++v)
      if (static_cast<std::size_t>(col[v]) == best) cell.push_back(v);
    return cell;
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::vector<std::vector<std::uint32_t>> nbr_;
};

Colouring initial_colours(const Graph& g) {
  if (g.colours().empty()) return Colouring(g.size(), 0);
  return g.colours();
}

/// The leftmost root-to-leaf path of the search tree of one graph.
struct Path {
  std::vector<Colouring> nodes;              // nodes[d]: colouring at depth d
  std::vector<std::uint64_t> invariants;     // invariants[d]
  std::vector<std::size_t> chosen;           // chosen[d]: vertex individualised at depth d
  Colouring leaf;
};

Path first_path(const Refiner& r) {
  Path p;
  Colouring col = r.refine(r.normalise(initial_colours(r.graph())));
  while (true) {
    p.nodes.push_back(col);
    p.invariants.push_back(r.invariant(col));
    auto cell = Refiner::target_cell(col);
    if (cell.empty()) break;
    p.chosen.push_back(cell.front());
    col = r.individualise(col, cell.front());
  }
  p.leaf = p.nodes.back();
  return p;
}

/// Searches the subtree of `rb` below `col` (at `depth`) for a leaf whose
/// labelling matches the reference leaf of graph `a`; returns a -> b.
class Matcher {
 public:
  Matcher(const Graph& a, const Path& ref, const Refiner& rb, const Deadline* d)
      : a_(a), ref_(ref), rb_(rb), deadline_(d) {}

  std::optional<Permutation> search(const Colouring& col, std::size_t depth) {
    if (++nodes_ % 256 == 0) poll(deadline_);
    if (depth >= ref_.nodes.size() || rb_.invariant(col) != ref_.invariants[depth]) return std::nullopt;
    auto cell = Refiner::target_cell(col);
    if (cell.empty()) return depth + 1 == ref_.nodes.size() ? leaf(col) : std::nullopt;
    for (auto w : cell)
      if (auto found = search(rb_.individualise(col, w), depth + 1)) return found;
    return std::nullopt;
  }

 private:
  std::optional<Permutation> leaf(const Colouring& col) const {
    const std::size_t n = col.size();
    std::vector<std::uint32_t> by_label(n);
    for (std::size_t v = 0; v < n; ++v) by_label[col[v]] = static_cast<std::uint32_t>(v);
    std::vector<std::uint32_t> img(n);
    for (std::size_t v = 0; v < n; ++v) img[v] = by_label[ref_.leaf[v]];
    const Graph& b = rb_.graph();
    const bool coloured = !a_.colours().empty() || !b.colours().empty();
    for (std::size_t u = 0; u < n; ++u) {
      if (coloured && (a_.colours().empty() || b.colours().empty() || a_.colours()[u] != b.colours()[img[u]]))
        return std::nullopt;
      if (a_.degree(u) != b.degree(img[u])) return std::nullopt;
      for (auto v : a_.neighbors(u))
        if (!b.adjacent(img[u], img[v])) return std::nullopt;
    }
    return Permutation(std::move(img));
  }

  const Graph& a_;
  const Path& ref_;
  const Refiner& rb_;
  const Deadline* deadline_;
  std::size_t nodes_ = 0;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PermGroup graph_automorphisms(const Graph& g, const Deadline* deadline) {
  const std::size_t n = g.size();
  if (n == 0) return PermGroup(0, {});
  poll(deadline);
  Refiner r(g);
  const Path path = first_path(r);
  std::vector<Permutation> gens;
  UnionFind orbits(n);
  Matcher matcher(g, path, r, deadline);
  // Deepest level first: generators found below fix the whole path prefix.
  for (std::size_t d = path.chosen.size(); d-- > 0;) {
    const std::size_t v = path.chosen[d];
    poll(deadline);
    for (auto w : Refiner::target_cell(path.nodes[d])) {
      if (w == v || orbits.find(w) == orbits.find(v)) continue;
      auto found = matcher.search(r.individualise(path.nodes[d], w), d + 1);
      if (!found) continue;
      if (!g.is_automorphism(*found)) throw LemmaViolation("search returned a non-automorphism");
      for (std::size_t x = 0; x < n; ++x) orbits.unite(x, (*found)(x));
      gens.push_back(std::move(*found));
    }
  }
  return PermGroup(n, std::move(gens));
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b, const Deadline* deadline) {
  if (a.size() != b.size() || a.num_edges() != b.num_edges()) return std::nullopt;
  if (a.size() == 0) return Permutation::identity(0);
  Refiner ra(a), rb(b);
  const Path path = first_path(ra);
  Matcher matcher(a, path, rb, deadline);
  return matcher.search(rb.refine(rb.normalise(initial_colours(b))), 0);
}

}  // namespace gccaut
