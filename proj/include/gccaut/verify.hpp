#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gccaut/perm_group.hpp"
#include "gccaut/symmetry.hpp"

namespace gccaut {

class Deadline;

/// Outcome of checking the structure theorem on one complex. Clauses are
/// listed in a fixed order: aut_order, dih_in_aut, diag_in_aut, product,
/// intersection, dih_normal, r_orbits, stabilizers, relations.
struct VerifyReport {
  std::string type;
  int m = 1;
  std::uint64_t aut_order = 0;
  std::uint64_t predicted = 0;
  std::vector<std::pair<std::string, bool>> clauses;
  std::vector<std::size_t> orbit_sizes;  // Aut-orbits, ordered by least vertex

  PermGroup aut, dih, diag;

  bool passed() const;
  /// Name of the first failed clause, or empty.
  std::string first_failure() const;
};

/// Computes Aut from the bare graph and checks every clause. Never throws on
/// a failed clause (see require_passed). Throws RankTooSmall for rank 1,
/// InvalidArgument if reducible, BudgetExceeded past the deadline.
VerifyReport verify_main_theorem(const ComplexHandle& cx, const Deadline* deadline = nullptr);

/// Throws VerificationFailure naming the first failed clause.
void require_passed(const VerifyReport& report);

/// Stabilizer of -rho^1 as the explicit set {D, X D}: X = S for white rho,
/// X = T for black rho, D over even diagram maps fixing -rho^1.
std::vector<Permutation> predicted_stabilizer(const ComplexHandle& cx, int rho);

}  // namespace gccaut
