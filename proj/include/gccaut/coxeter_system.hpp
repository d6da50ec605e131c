#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gccaut/coxeter_type.hpp"
#include "gccaut/permutation.hpp"
#include "gccaut/scalar.hpp"

namespace gccaut {

/// A root of a finite root system.
///
/// In the coordinate model `coords` holds the simple-root coefficients.
/// In the dihedral angle model `coords` is empty and the root is the unit
/// vector at angle `angle * pi / k`.
struct Root {
  std::size_t index = 0;
  bool positive = true;
  ScalarVector coords;
  int angle = -1;
};

/// Element of W, represented by its (faithful) permutation of the roots.
/// The matrix in the simple-root basis is recovered on demand through
/// CoxeterSystem::matrix, since the images of the simple roots determine it.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Permutation p) : perm_(std::move(p)) {}

  const Permutation& perm() const noexcept { return perm_; }
  std::size_t operator()(std::size_t root) const { return perm_(root); }

  GroupElement inverse() const { return GroupElement(perm_.inverse()); }
  bool is_identity() const noexcept { return perm_.is_identity(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.perm_ * b.perm_);
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Permutation perm_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return PermutationHash{}(g.perm()); }
};

enum class Parity { Even, Odd, Mixed };

/// Permutation of the simple roots preserving the Coxeter matrix.
struct DiagramSymmetry {
  std::vector<int> map;
  Parity parity = Parity::Even;

  bool is_identity() const;
  friend bool operator==(const DiagramSymmetry&, const DiagramSymmetry&) = default;
};

struct BuildOptions {
  /// Exchange the two colour classes of the Coxeter graph.
  bool swap_bipartition = false;
};

/// An irreducible finite root system with its bipartite Coxeter element.
///
/// Root indices: 0..N-1 are the positive roots with the simple roots first
/// (root s is alpha_s), and root i+N is the negative of root i.
/// Immutable after construction.
class CoxeterSystem {
 public:
  static CoxeterSystem build(const IrreducibleType& t, const BuildOptions& opts = {});

  /// Coordinate model from an explicit Gram matrix. `black` marks the simple
  /// roots of the first colour class; it must be a proper 2-colouring.
  static CoxeterSystem from_gram(const IrreducibleType& label, ScalarMatrix gram,
                                 std::vector<bool> black);

  /// Dihedral angle model for I2(k).
  static CoxeterSystem dihedral(int k, std::vector<bool> black);

  /// Default bipartition: 2-colouring with the lowest-index node black.
  static std::vector<bool> default_bipartition(const CoxeterMatrix& m, bool swap);

  CoxeterSystem with_swapped_bipartition() const;

  const IrreducibleType& type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  const CoxeterMatrix& coxeter_matrix() const noexcept { return cm_; }
  bool uses_angle_model() const noexcept { return angle_k_ > 0; }
  const ScalarMatrix& gram() const noexcept { return gram_; }

  std::size_t num_roots() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  bool is_positive(std::size_t i) const { return i < num_positive(); }
  std::size_t negative_of(std::size_t i) const {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }
  /// s if root i is alpha_s.
  std::optional<int> simple_index(std::size_t i) const;
  /// s if root i is -alpha_s.
  std::optional<int> negative_simple_index(std::size_t i) const;
  std::optional<std::size_t> find_root(const ScalarVector& coords) const;

  const std::vector<bool>& black_mask() const noexcept { return black_; }
  bool is_black(int s) const { return black_.at(s); }
  const std::vector<int>& black() const noexcept { return black_list_; }
  const std::vector<int>& white() const noexcept { return white_list_; }

  const GroupElement& identity() const noexcept { return identity_; }
  const GroupElement& simple_reflection(int s) const { return reflections_.at(s); }
  /// t_alpha for any root index (t_alpha = t_{-alpha}).
  const GroupElement& reflection(std::size_t root) const;
  const GroupElement& c() const noexcept { return c_; }
  const GroupElement& c_black() const noexcept { return c_black_; }
  const GroupElement& c_white() const noexcept { return c_white_; }
  const GroupElement& w0() const noexcept { return w0_; }

  int coxeter_number() const noexcept { return h_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  /// Position in Steinberg's indexing (0-based): -white simples, black
  /// simples, then c-propagation.
  std::size_t steinberg_index(std::size_t root) const { return steinberg_pos_.at(root); }
  const std::vector<std::size_t>& steinberg_sequence() const noexcept { return steinberg_seq_; }
  /// Block of a Steinberg position: 0 for -white, 1 for black, 2 for c_black(white), ...
  int steinberg_block(std::size_t position) const;

  std::size_t apply(const GroupElement& w, std::size_t root) const { return w(root); }
  ScalarMatrix matrix(const GroupElement& w) const;
  int inner_product_sign(std::size_t a, std::size_t b) const;
  /// Simple indices with nonzero coefficient. Throws NegativeRoot.
  std::uint64_t support(std::size_t root) const;
  int reflection_length(const GroupElement& w) const;
  bool absolute_leq_c(const GroupElement& w) const;
  std::strong_ordering steinberg_order(std::size_t a, std::size_t b) const {
    return steinberg_index(a) <=> steinberg_index(b);
  }

  std::vector<DiagramSymmetry> diagram_symmetries() const;
  /// rho -> -w0(rho) on the simple roots.
  DiagramSymmetry canonical_diagram_map() const;
  /// Extension of a diagram symmetry to a permutation of all roots.
  Permutation induced_root_map(const DiagramSymmetry& d) const;
  Parity parity_of(const std::vector<int>& map) const;

  /// Coefficients as "a/b" strings; in the angle model a single "j*pi/k" entry.
  std::vector<std::string> root_coordinate_strings(std::size_t root) const;
  /// Compact label such as "+(1,1)" or "-(1,0)", or "+θ3" in the angle model.
  std::string root_label(std::size_t root) const;

 private:
  CoxeterSystem() = default;
  void finish();  // reflections, Coxeter element, Steinberg data, w0
  Permutation simple_reflection_perm_coords(int s) const;

  IrreducibleType type_;
  int rank_ = 0;
  CoxeterMatrix cm_;
  ScalarMatrix gram_;
  int angle_k_ = 0;
  std::vector<Root> roots_;
  std::unordered_map<ScalarVector, std::size_t, ScalarVectorHash> root_lookup_;
  std::vector<bool> black_;
  std::vector<int> black_list_;
  std::vector<int> white_list_;

  GroupElement identity_;
  std::vector<GroupElement> reflections_;  // indexed by positive root
  GroupElement c_, c_black_, c_white_, w0_;
  int h_ = 0;
  std::vector<int> exponents_;
  std::vector<std::size_t> steinberg_seq_;
  std::vector<std::size_t> steinberg_pos_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// Product of irreducible systems; the simple roots of factor i follow those
/// of factors 0..i-1 in the global numbering.
struct ProductSystem {
  std::vector<SystemPtr> factors;

  static ProductSystem build(const CoxeterType& t, const BuildOptions& opts = {});
  static ProductSystem single(SystemPtr s) { return ProductSystem{{std::move(s)}}; }

  CoxeterType type() const;
  int rank() const;
  bool is_irreducible() const { return factors.size() == 1; }
  ProductSystem with_swapped_bipartition() const;
};

/// Standard parabolic subsystem with its identification inside the parent.
struct ParabolicSubsystem {
  ProductSystem system;
  /// Parent simple index -> (component, simple index in component).
  std::vector<std::optional<std::pair<int, int>>> simple_map;
  /// Parent root index -> (component, root index in component).
  std::vector<std::optional<std::pair<int, std::size_t>>> root_map;
};

// Operation-level entry points.
CoxeterSystem build_coxeter_system(const IrreducibleType& t, const BuildOptions& opts = {});
ParabolicSubsystem parabolic_subsystem(const CoxeterSystem& sys, const std::vector<int>& keep);

}  // namespace gccaut
