#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gccaut/scalar.hpp"

namespace gccaut {

enum class Family { A, B, D, E, F, G, H, I2 };

/// A finite irreducible Coxeter type. Node numbering follows Bourbaki.
struct IrreducibleType {
  Family family = Family::A;
  int rank = 1;
  int k = 0;  // dihedral order parameter, I2 only

  static IrreducibleType make(Family f, int rank, int k = 0);

  /// Throws InvalidType unless the triple lies in the finite classification.
  void validate() const;

  /// "A3", "I2(7)".
  std::string name() const;
  /// Name after identifying I2(3)=A2, I2(4)=B2, I2(6)=G2.
  std::string canonical_name() const;

  int coxeter_number() const;
  std::vector<int> exponents() const;
  int num_positive_roots() const;

  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

/// Coxeter matrix entries m_st, with m_ss = 1. Zero never appears (finite type).
using CoxeterMatrix = std::vector<std::vector<int>>;

/// A (possibly reducible) finite Coxeter type written as a product.
struct CoxeterType {
  std::vector<IrreducibleType> factors;

  /// Parses "A5", "I2(7)", "A1xA1", "A2xB2". Throws InvalidType.
  static CoxeterType parse(std::string_view text);

  bool is_irreducible() const { return factors.size() == 1; }
  int rank() const;
  std::string name() const;
  /// Factor names canonicalized and sorted; equal for isomorphic types.
  std::string canonical_name() const;
};

CoxeterMatrix coxeter_matrix(const IrreducibleType& t);

/// Symmetric Gram matrix of the standard realization in the simple-root basis.
/// Crystallographic types use the symmetrized Cartan matrix (integer entries);
/// H3/H4 use norm 2 with off-diagonal entries in Z[golden ratio]. Not defined
/// for I2(k), which is realized by the angle model.
ScalarMatrix standard_gram(const IrreducibleType& t);

/// A connected component of a Coxeter graph with its recognized type.
struct ClassifiedComponent {
  IrreducibleType type;
  std::vector<int> nodes;  // sorted indices into the input matrix
};

/// Splits a Coxeter matrix into connected components and names each one.
/// Throws InvalidType if a component is not of finite type.
std::vector<ClassifiedComponent> classify(const CoxeterMatrix& m);

/// All rank-n irreducible finite types except the dihedral family.
std::vector<IrreducibleType> irreducible_types_of_rank(int n);

}  // namespace gccaut
