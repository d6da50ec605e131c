#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "gccaut/permutation.hpp"

namespace gccaut {

/// Permutation group given by generators, with a lazily built base and
/// strong generating set (deterministic Schreier-Sims).
///
/// Copies share the computed stabilizer chain; the group is immutable.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  /// Throws IncompatibleDegree if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  /// Same group, but the base starts with `prefix` (used for stabilizers).
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<std::uint32_t> prefix);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  /// Throws ArithmeticError if the order exceeds 64 bits.
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  PermGroup stabilizer(std::uint32_t point) const;
  std::vector<std::uint32_t> base() const;
  /// All elements in a fixed order. Throws InvalidArgument above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1'000'000) const;

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<Permutation> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> where;     // point -> position in orbit, or -1
    std::vector<Permutation> transversal;  // transversal[i](point) == orbit[i]
  };
  struct Chain {
    std::vector<Level> levels;
  };
  const Chain& chain() const;
  void build(Chain& c) const;
  void rebuild_level(Level& l) const;
  /// Residue of g and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(const Chain& c, Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<std::uint32_t> prefix_;
  std::shared_ptr<Chain> chain_;
  std::shared_ptr<std::once_flag> once_;
};

/// H normal in G, with H a subgroup of G. Throws IncompatibleDegree.
bool is_normal(const PermGroup& g, const PermGroup& h);
/// Throws IncompatibleDegree; enumerates the smaller group.
PermGroup intersection(const PermGroup& g, const PermGroup& h);
/// |G H| = |G| |H| / |G ∩ H|.
std::uint64_t subgroup_product_order(const PermGroup& g, const PermGroup& h);
/// True iff both groups contain each other's generators.
bool same_group(const PermGroup& g, const PermGroup& h);

}  // namespace gccaut
