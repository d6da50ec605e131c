#include "gccaut/colored_complex.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "gccaut/deadline.hpp"
#include "gccaut/errors.hpp"

namespace gccaut {

VertexSet VertexSet::build(SystemPtr sys, int m) {
  if (!sys) throw InvalidArgument("null system");
  if (m < 1) throw InvalidArgument("m must be at least 1");
  VertexSet vs;
  vs.sys_ = std::move(sys);
  vs.m_ = m;
  const auto& s = *vs.sys_;
  const std::size_t n = s.rank();
  const std::size_t N = s.num_positive();
  const std::size_t r = s.white().size();
  const int h = s.coxeter_number();
  const auto& seq = s.steinberg_sequence();

  for (std::size_t p = 0; p < r; ++p) {
    vs.vertices_.push_back({seq[p], 1});
    vs.blocks_.push_back(0);
  }
  for (int j = m; j >= 1; --j) {
    for (std::size_t p = r; p < r + N; ++p) {
      vs.vertices_.push_back({seq[p], j});
      vs.blocks_.push_back((m - j) * h + s.steinberg_block(p));
    }
  }
  for (std::size_t p = N + r; p < N + n; ++p) {
    vs.vertices_.push_back({seq[p], 1});
    vs.blocks_.push_back(m * h + 1);
  }

  vs.lookup_.assign(s.num_roots() * m, -1);
  for (std::size_t v = 0; v < vs.vertices_.size(); ++v) {
    const auto& x = vs.vertices_[v];
    vs.lookup_[x.root * m + (x.color - 1)] = static_cast<std::int32_t>(v);
  }

  std::vector<Permutation::value_type> img(vs.vertices_.size());
  for (std::size_t v = 0; v < vs.vertices_.size(); ++v)
    img[v] = static_cast<Permutation::value_type>(vs.index_of(rotation_R(vs, vs.vertices_[v])));
  vs.rotation_ = Permutation(std::move(img));
  return vs;
}

std::optional<std::size_t> VertexSet::find(const ColoredRoot& x) const {
  if (x.color < 1 || x.color > m_ || x.root >= sys_->num_roots()) return std::nullopt;
  auto v = lookup_[x.root * m_ + (x.color - 1)];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::size_t VertexSet::index_of(const ColoredRoot& x) const {
  auto v = find(x);
  if (!v) throw InvalidArgument("coloured root is not almost-positive");
  return *v;
}

VertexSet enumerate_vertices(SystemPtr sys, int m) { return VertexSet::build(std::move(sys), m); }

ColoredRoot rotation_R(const VertexSet& vs, const ColoredRoot& v) {
  const auto& s = vs.system();
  const int m = vs.m();
  if (s.is_positive(v.root)) {
    if (v.color < m) return {v.root, v.color + 1};
    auto simple = s.simple_index(v.root);
    if (simple && !s.is_black(*simple)) return {s.negative_of(v.root), 1};
    return {s.c()(v.root), 1};
  }
  auto neg = s.negative_simple_index(v.root);
  if (!neg || v.color != 1) throw InvalidArgument("coloured root is not almost-positive");
  if (s.is_black(*neg)) return {s.negative_of(v.root), 1};
  return {s.c()(v.root), 1};
}

ROrbitReport r_orbit_report(const VertexSet& vs) {
  const auto& s = vs.system();
  const std::size_t full = static_cast<std::size_t>(vs.num_blocks());
  const auto cmap = s.canonical_diagram_map();
  ROrbitReport rep;
  rep.w0_order = cmap.is_identity() ? 1 : 2;
  rep.order = vs.rotation().order();
  for (const auto& cyc : vs.rotation().cycles()) {
    OrbitInfo info;
    info.size = cyc.size();
    for (auto v : cyc)
      if (vs.is_negative(v)) info.negatives.push_back(v);
    std::sort(info.negatives.begin(), info.negatives.end());
    bool ok = false;
    if (2 * info.size == full) {
      ok = info.negatives.size() == 1;
    } else if (info.size == full && info.negatives.size() == 2) {
      int a = *s.negative_simple_index(vs.vertex(info.negatives[0]).root);
      int b = *s.negative_simple_index(vs.vertex(info.negatives[1]).root);
      ok = cmap.map[a] == b && a != b;
    }
    if (!ok) throw LemmaViolation("R-orbit of size " + std::to_string(info.size) + " breaks the orbit lemma");
    rep.orbits.push_back(std::move(info));
  }
  if (2 * rep.order != full * rep.w0_order) throw LemmaViolation("order of R disagrees with (mh+2)/2 * |C|");
  return rep;
}

int block_index(const VertexSet& vs, const ColoredRoot& v) { return vs.block(vs.index_of(v)); }

std::strong_ordering tzanaki_compare(const VertexSet& vs, const ColoredRoot& u, const ColoredRoot& v) {
  return vs.index_of(u) <=> vs.index_of(v);
}

CompatibilityRules::CompatibilityRules(const VertexSet& vs) : vs_(&vs) {
  const auto& s = vs.system();
  n_ = s.num_positive();
  below_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      below_[a * n_ + b] = s.absolute_leq_c(s.reflection(a) * s.reflection(b));
}

bool CompatibilityRules::operator()(const ColoredRoot& u, const ColoredRoot& v) const {
  if (u == v) return false;
  const auto& s = vs_->system();
  const bool upos = s.is_positive(u.root), vpos = s.is_positive(v.root);
  if (!upos && !vpos) return true;
  if (!upos) return !((s.support(v.root) >> *s.negative_simple_index(u.root)) & 1U);
  if (!vpos) return !((s.support(u.root) >> *s.negative_simple_index(v.root)) & 1U);
  if (u.root == v.root) return false;
  if (u.color == v.color)
    return s.inner_product_sign(u.root, v.root) >= 0 &&
           (product_below_c(u.root, v.root) || product_below_c(v.root, u.root));
  return u.color < v.color ? product_below_c(u.root, v.root) : product_below_c(v.root, u.root);
}

bool compatible_rules(const VertexSet& vs, const ColoredRoot& u, const ColoredRoot& v) {
  return CompatibilityRules(vs)(u, v);
}

bool compatible_orbit(const VertexSet& vs, const ColoredRoot& u, const ColoredRoot& v) {
  const auto& s = vs.system();
  ColoredRoot a = u, b = v;
  if (a == b) return false;
  for (int step = 0; step <= 2 * vs.num_blocks(); ++step) {
    const bool an = !s.is_positive(a.root), bn = !s.is_positive(b.root);
    if (an && bn) return true;
    if (an) return !((s.support(b.root) >> *s.negative_simple_index(a.root)) & 1U);
    if (bn) return !((s.support(a.root) >> *s.negative_simple_index(b.root)) & 1U);
    a = rotation_R(vs, a);
    b = rotation_R(vs, b);
  }
  throw OrbitExhausted("no negative simple root reached along the R-orbit");
}

ComplexHandle ComplexHandle::build(const ProductSystem& sys, int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  ComplexHandle cx;
  cx.sys_ = sys;
  cx.m_ = m;
  std::size_t total = 0;
  for (const auto& f : sys.factors) {
    cx.offsets_.push_back(total);
    cx.factors_.push_back(VertexSet::build(f, m));
    total += cx.factors_.back().size();
  }
  cx.graph_ = Graph(total);
  for (std::size_t i = 0; i < cx.factors_.size(); ++i) {
    const auto& vs = cx.factors_[i];
    CompatibilityRules rules(vs);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (rules(vs.vertex(a), vs.vertex(b))) cx.graph_.add_edge(cx.offsets_[i] + a, cx.offsets_[i] + b);
    for (std::size_t j = i + 1; j < cx.factors_.size(); ++j)
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < cx.factors_[j].size(); ++b)
          cx.graph_.add_edge(cx.offsets_[i] + a, cx.offsets_[j] + b);
  }
  return cx;
}

ComplexHandle ComplexHandle::build(const CoxeterType& t, int m, const BuildOptions& opts) {
  return build(ProductSystem::build(t, opts), m);
}

ComplexHandle build_complex(const ProductSystem& sys, int m) { return ComplexHandle::build(sys, m); }

std::pair<std::size_t, std::size_t> ComplexHandle::locate(std::size_t v) const {
  if (v >= size()) throw InvalidArgument("vertex out of range");
  std::size_t i = factors_.size() - 1;
  while (offsets_[i] > v) --i;
  return {i, v - offsets_[i]};
}

const VertexSet& ComplexHandle::vertex_set() const {
  if (factors_.size() != 1) throw InvalidArgument("operation requires an irreducible system");
  return factors_[0];
}

std::vector<std::vector<std::size_t>> ComplexHandle::factor_partition() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<std::size_t> block(factors_[i].size());
    std::iota(block.begin(), block.end(), offsets_[i]);
    out.push_back(std::move(block));
  }
  return out;
}

const std::vector<Face>& ComplexHandle::facets() const {
  std::call_once(cache_->once, [this] { cache_->facets = facets_cliques(*this); });
  return cache_->facets;
}

std::vector<Face> facets_tzanaki(const ComplexHandle& cx, unsigned threads, const Deadline* deadline) {
  const VertexSet& vs = cx.vertex_set();
  const CoxeterSystem& s = vs.system();
  const int n = s.rank();
  const std::size_t V = vs.size();
  std::vector<const GroupElement*> refl(V);
  for (std::size_t v = 0; v < V; ++v) refl[v] = &s.reflection(vs.vertex(v).root);

  std::atomic<std::size_t> next{0};
  std::vector<std::vector<Face>> found(std::max(1U, threads));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](unsigned id) {
    try {
      // Memo: element -> (reflection length, below c).
      std::unordered_map<Permutation, std::pair<int, bool>, PermutationHash> memo;
      auto info = [&](const GroupElement& w) {
        auto it = memo.find(w.perm());
        if (it != memo.end()) return it->second;
        int l = s.reflection_length(w);
        bool below = l + s.reflection_length(w.inverse() * s.c()) == n;
        return memo.emplace(w.perm(), std::make_pair(l, below)).first->second;
      };
      std::vector<std::size_t> stack;
      std::size_t nodes = 0;
      // p = t_{stack[0]} ... t_{stack[k-1]}, stack strictly decreasing.
      auto dfs = [&](auto&& self, const GroupElement& p) -> void {
        if (++nodes % 1024 == 0) poll(deadline);
        const int depth = static_cast<int>(stack.size());
        if (depth == n) {
          if (p == s.c()) {
            Face f(stack.rbegin(), stack.rend());
            found[id].push_back(std::move(f));
          }
          return;
        }
        for (std::size_t v = stack.back(); v-- > 0;) {
          GroupElement q = p * *refl[v];
          auto [l, below] = info(q);
          if (l != depth + 1 || !below) continue;
          stack.push_back(v);
          self(self, q);
          stack.pop_back();
        }
      };
      for (std::size_t top; (top = next.fetch_add(1)) < V;) {
        auto [l, below] = info(*refl[top]);
        if (l != 1 || !below) continue;
        stack.assign(1, top);
        dfs(dfs, *refl[top]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(V);
    }
  };

  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Face> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> maximal_cliques(const Graph& g, const Deadline* deadline) {
  std::vector<Face> out;
  std::vector<std::vector<std::uint32_t>> nbr(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) nbr[v] = g.neighbors(v);
  std::size_t calls = 0;
  std::vector<std::size_t> clique;
  auto intersect = [&](const std::vector<std::size_t>& set, std::size_t v) {
    std::vector<std::size_t> r;
    for (auto x : set)
      if (g.adjacent(v, x)) r.push_back(x);
    return r;
  };
  auto bk = [&](auto&& self, std::vector<std::size_t> P, std::vector<std::size_t> X) -> void {
    if (++calls % 4096 == 0) poll(deadline);
    if (P.empty()) {
      if (X.empty()) {
        Face f = clique;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
      }
      return;
    }
    std::size_t pivot = P.front(), best = 0;
    for (const auto* set : {&P, &X})
      for (auto u : *set) {
        std::size_t cnt = 0;
        for (auto x : P) cnt += g.adjacent(u, x);
        if (cnt >= best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<std::size_t> candidates;
    for (auto v : P)
      if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (auto v : candidates) {
      clique.push_back(v);
      self(self, intersect(P, v), intersect(X, v));
      clique.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  };
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  bk(bk, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> facets_cliques(const ComplexHandle& cx, const Deadline* deadline) {
  std::vector<Face> out;
  for (auto& f : maximal_cliques(cx.graph(), deadline))
    if (static_cast<int>(f.size()) == cx.rank()) out.push_back(std::move(f));
  return out;
}

std::uint64_t fuss_catalan(const CoxeterSystem& sys, int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  unsigned __int128 num = 1, den = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 120;
  for (int e : sys.exponents()) {
    num *= static_cast<unsigned>(m * sys.coxeter_number() + e + 1);
    den *= static_cast<unsigned>(e + 1);
    if (num > limit) throw ArithmeticError("Fuss-Catalan number overflows");
  }
  if (num % den != 0) throw LemmaViolation("Fuss-Catalan product is not an integer");
  unsigned __int128 q = num / den;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw ArithmeticError("Fuss-Catalan number overflows");
  return static_cast<std::uint64_t>(q);
}

std::uint64_t fuss_catalan(const ProductSystem& sys, int m) {
  unsigned __int128 total = 1;
  for (const auto& f : sys.factors) {
    total *= fuss_catalan(*f, m);
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ArithmeticError("Fuss-Catalan number overflows");
  }
  return static_cast<std::uint64_t>(total);
}

LinkResult link(const ComplexHandle& cx, const Face& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= cx.size()) throw NotAFace("vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (f[i] == f[j] || !cx.adjacent(f[i], f[j])) throw NotAFace("vertices are not pairwise compatible");
  }
  LinkResult out;
  for (std::size_t v = 0; v < cx.size(); ++v) {
    if (std::find(f.begin(), f.end(), v) != f.end()) continue;
    if (std::all_of(f.begin(), f.end(), [&](std::size_t u) { return cx.adjacent(u, v); })) out.vertices.push_back(v);
  }
  out.graph = cx.graph().induced(out.vertices);
  if (f.size() != 1 || !cx.is_irreducible() || !cx.vertex_set().is_negative(f[0])) return out;

  const VertexSet& vs = cx.vertex_set();
  const CoxeterSystem& s = vs.system();
  const int rho = *s.negative_simple_index(vs.vertex(f[0]).root);
  std::vector<int> keep;
  for (int t = 0; t < s.rank(); ++t)
    if (t != rho) keep.push_back(t);
  ParabolicSubsystem par = parabolic_subsystem(s, keep);
  ComplexHandle sub = ComplexHandle::build(par.system, cx.m());

  std::vector<char> hit(sub.size(), 0);
  for (auto v : out.vertices) {
    const auto& x = vs.vertex(v);
    const auto& target = par.root_map[x.root];
    if (!target) throw LemmaViolation("link vertex outside the parabolic root subsystem");
    std::size_t w = sub.offset(target->first) + sub.factor(target->first).index_of({target->second, x.color});
    if (hit[w]++) throw LemmaViolation("link bijection is not injective");
    out.bijection.push_back(w);
  }
  if (out.bijection.size() != sub.size()) throw LemmaViolation("link bijection is not surjective");
  for (std::size_t a = 0; a < out.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b)
      if (out.graph.adjacent(a, b) != sub.adjacent(out.bijection[a], out.bijection[b]))
        throw LemmaViolation("link of -rho^1 is not isomorphic to the parabolic complex");
  out.parabolic = std::move(sub);
  return out;
}

bool factor_partition_check(const ComplexHandle& cx, const Permutation& p) {
  if (!cx.graph().is_automorphism(p)) throw NotAnAutomorphism("permutation does not preserve compatibility");
  auto blocks = cx.factor_partition();
  for (const auto& b : blocks) {
    std::vector<std::size_t> img;
    for (auto v : b) img.push_back(p(v));
    std::sort(img.begin(), img.end());
    if (std::find(blocks.begin(), blocks.end(), img) == blocks.end()) return false;
  }
  return true;
}

}  // namespace gccaut
