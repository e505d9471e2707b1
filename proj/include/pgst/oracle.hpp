#pragma once

// Brute-force oracles for the relation lattice. Nothing here touches the
// kernel computation in relation_lattice; both sides only share the exact
// eigenvalue coordinates from theta_coordinates.

#include "pgst/common.hpp"
#include "pgst/path_spectrum.hpp"
#include "pgst/relation_lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pgst {

struct BruteForceRelation {
  std::vector<int> support;
  IntVector relation;  // indexed like support
  bool verified = false;
};

inline constexpr std::uint64_t kMaxOracleCandidates = 100'000'000;

/// Every l in [-bound, bound]^support with sum l_j theta_j = 0 and
/// sum l_j = 0, in lexicographic order (the zero vector included).
///
/// The support is split in two halves that are enumerated separately and
/// joined on their exact constraint signature. Throws InvalidArgument when
/// bound < 1 or the two half enumerations exceed `max_candidates`.
std::vector<BruteForceRelation> brute_force_relations(const PathSpec& spec, int a, int bound,
                                                      std::uint64_t max_candidates = kMaxOracleCandidates);

/// Exact check of both relation constraints. `relation` is indexed by the
/// support of a; throws InvalidArgument on a length mismatch.
bool verify_relation(const PathSpec& spec, int a, const IntVector& relation);

/// True iff every basis vector of the relation lattice of (n, a) satisfies
/// l_j = l_{m-j} for all even j in the support (l_j = 0 off the support).
/// Requires in_internal_pgst_family(n, a); throws InvalidArgument otherwise.
bool mirror_identity_check(const PathSpec& spec, int a);

/// Coefficients c with relation = sum_i c_i basis_i, if they exist and are
/// integers. Solved by rational elimination, independent of how the basis
/// was produced. Basis vectors must be linearly independent.
class LatticeMembership {
 public:
  explicit LatticeMembership(const std::vector<IntVector>& basis, std::size_t dimension);

  std::optional<IntVector> coefficients(const IntVector& relation) const;

 private:
  std::size_t rank_ = 0;
  std::size_t dimension_ = 0;
  // transform * B^T is in reduced row echelon form with pivots in rows 0..rank-1.
  std::vector<std::vector<boost::multiprecision::cpp_rational>> transform_;
};

}  // namespace pgst
