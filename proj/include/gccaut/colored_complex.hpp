#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gccaut/coxeter_system.hpp"
#include "gccaut/graph.hpp"

namespace gccaut {

class Deadline;

/// Pair (root, colour). Almost-positive iff the root is positive, or the
/// root is a negative simple root and the colour is 1.
struct ColoredRoot {
  std::size_t root = 0;
  int color = 1;
  friend bool operator==(const ColoredRoot&, const ColoredRoot&) = default;
};

/// Almost-positive coloured roots of an irreducible system, listed in the
/// total order of reflection factorizations: vertex index == rank in that order.
///
/// Blocks: 0 is -Delta_white^1, then colours m, m-1, ..., 1 each contribute h
/// blocks of positive roots in Steinberg order, and mh+1 is -Delta_black^1.
class VertexSet {
 public:
  static VertexSet build(SystemPtr sys, int m);

  const CoxeterSystem& system() const noexcept { return *sys_; }
  const SystemPtr& system_ptr() const noexcept { return sys_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int num_blocks() const noexcept { return m_ * sys_->coxeter_number() + 2; }

  const ColoredRoot& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<ColoredRoot>& vertices() const noexcept { return vertices_; }
  std::optional<std::size_t> find(const ColoredRoot& x) const;
  /// Throws InvalidArgument for a coloured root that is not almost-positive.
  std::size_t index_of(const ColoredRoot& x) const;
  bool is_negative(std::size_t v) const { return !sys_->is_positive(vertices_.at(v).root); }
  int block(std::size_t v) const { return blocks_.at(v); }

  /// R as a permutation of vertex indices.
  const Permutation& rotation() const noexcept { return rotation_; }

 private:
  SystemPtr sys_;
  int m_ = 1;
  std::vector<ColoredRoot> vertices_;
  std::vector<int> blocks_;
  std::vector<std::int32_t> lookup_;  // root * m + (color - 1) -> vertex, or -1
  Permutation rotation_;
};

/// A sorted list of vertex indices.
using Face = std::vector<std::size_t>;

/// The compatibility graph of Gamma^(m) over a possibly reducible system.
///
/// Vertices of factor i occupy [offset(i), offset(i) + factor(i).size()) and
/// keep the factor's own order. Vertices in different factors are adjacent.
class ComplexHandle {
 public:
  static ComplexHandle build(const ProductSystem& sys, int m);
  static ComplexHandle build(const CoxeterType& t, int m, const BuildOptions& opts = {});

  const ProductSystem& system() const noexcept { return sys_; }
  int m() const noexcept { return m_; }
  int rank() const noexcept { return sys_.rank(); }
  bool is_irreducible() const noexcept { return factors_.size() == 1; }
  std::size_t size() const noexcept { return graph_.size(); }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  const VertexSet& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  /// Global vertex -> (factor, local vertex).
  std::pair<std::size_t, std::size_t> locate(std::size_t v) const;
  /// The single factor's vertex set; throws InvalidArgument when reducible.
  const VertexSet& vertex_set() const;

  const Graph& graph() const noexcept { return graph_; }
  bool adjacent(std::size_t u, std::size_t v) const { return graph_.adjacent(u, v); }
  std::vector<std::vector<std::size_t>> factor_partition() const;

  /// Facets, computed once from the clique oracle and cached.
  const std::vector<Face>& facets() const;

 private:
  ProductSystem sys_;
  int m_ = 1;
  std::vector<VertexSet> factors_;
  std::vector<std::size_t> offsets_;
  Graph graph_;
  struct Cache {
    std::once_flag once;
    std::vector<Face> facets;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct OrbitInfo {
  std::size_t size = 0;
  std::vector<std::size_t> negatives;  // vertex indices of the form -rho^1
};

struct ROrbitReport {
  std::vector<OrbitInfo> orbits;
  std::uint64_t order = 0;     // order of R as a permutation
  std::uint64_t w0_order = 0;  // order of the canonical diagram map C
};

/// Result of a link computation. `vertices` are global indices of cx, in
/// increasing order; `graph` is the induced graph in that order.
struct LinkResult {
  std::vector<std::size_t> vertices;
  Graph graph;
  /// For f = {-rho^1} in an irreducible complex: the complex of W_rho and the
  /// bijection link position -> vertex of that complex (an isomorphism).
  std::optional<ComplexHandle> parabolic;
  std::vector<std::size_t> bijection;
};

// Operation-level entry points.
VertexSet enumerate_vertices(SystemPtr sys, int m);
ColoredRoot rotation_R(const VertexSet& vs, const ColoredRoot& v);
/// Throws LemmaViolation if an orbit breaks the orbit lemma.
ROrbitReport r_orbit_report(const VertexSet& vs);
int block_index(const VertexSet& vs, const ColoredRoot& v);
std::strong_ordering tzanaki_compare(const VertexSet& vs, const ColoredRoot& u, const ColoredRoot& v);

/// Table of t_a t_b <= c for positive roots a, b, reused by the rule-based test.
class CompatibilityRules {
 public:
  explicit CompatibilityRules(const VertexSet& vs);
  bool operator()(const ColoredRoot& u, const ColoredRoot& v) const;
  bool product_below_c(std::size_t a, std::size_t b) const { return below_[a * n_ + b]; }

 private:
  const VertexSet* vs_;
  std::size_t n_;
  std::vector<char> below_;
};

bool compatible_rules(const VertexSet& vs, const ColoredRoot& u, const ColoredRoot& v);
/// Throws OrbitExhausted if neither vertex ever reaches -Delta^1.
bool compatible_orbit(const VertexSet& vs, const ColoredRoot& u, const ColoredRoot& v);

ComplexHandle build_complex(const ProductSystem& sys, int m);
/// Decreasing factorizations of c into reflections. Irreducible systems only.
std::vector<Face> facets_tzanaki(const ComplexHandle& cx, unsigned threads = 1,
                                 const Deadline* deadline = nullptr);
/// Maximal cliques of size rank.
std::vector<Face> facets_cliques(const ComplexHandle& cx, const Deadline* deadline = nullptr);
/// prod (mh + e_i + 1) / (e_i + 1), multiplied over irreducible factors.
std::uint64_t fuss_catalan(const ProductSystem& sys, int m);
std::uint64_t fuss_catalan(const CoxeterSystem& sys, int m);
/// Throws NotAFace.
LinkResult link(const ComplexHandle& cx, const Face& f);
/// Throws NotAnAutomorphism.
bool factor_partition_check(const ComplexHandle& cx, const Permutation& p);

/// All maximal cliques of g (Bron-Kerbosch with pivoting), each sorted.
std::vector<Face> maximal_cliques(const Graph& g, const Deadline* deadline = nullptr);

}  // namespace gccaut
