#pragma once

// The lattice of integer relations
//   { l : sum_j l_j theta_j = 0 and sum_j l_j = 0 },  j ranging over the
// eigenvalue support of a vertex, computed as the integer kernel of the
// coordinate matrix of the theta_j in the power basis of Q(zeta_2m).

#include "pgst/common.hpp"
#include "pgst/path_spectrum.hpp"

#include <vector>

namespace pgst {

/// Row-major integer matrix.
using IntMatrix = std::vector<IntVector>;

/// Basis of {v in Z^cols : M v = 0} that generates every integer solution.
/// Empty when the kernel is trivial. Deterministic for a fixed input.
std::vector<IntVector> integer_kernel(const IntMatrix& matrix);

/// In-place integral LLL (delta = 3/4) on linearly independent rows.
/// The change of basis is unimodular, so the generated lattice is unchanged.
void lll_reduce(std::vector<IntVector>& basis);

/// Columns are the support indices of `support`; rows are the nonzero
/// power-basis coordinate rows of the theta_j followed by the all-ones row.
IntMatrix relation_matrix(const PathSpec& spec, const SupportSet& support);

struct RelationLattice {
  PathSpec spec;
  int vertex = 0;
  std::vector<int> support;       // ascending indices j
  std::vector<IntVector> basis;   // each of length support.size()

  std::size_t rank() const { return basis.size(); }
  /// Length-n vector with l_j at position j - 1 and zeros off the support.
  IntVector expand(const IntVector& relation) const;
};

/// Integer kernel of relation_matrix, LLL-reduced, each basis vector checked
/// exactly against both constraints (InvariantViolation otherwise).
RelationLattice relation_lattice(const PathSpec& spec, int a);

}  // namespace pgst
