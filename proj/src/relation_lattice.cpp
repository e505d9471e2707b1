#include "pgst/relation_lattice.hpp"

#include "pgst/cyclotomic.hpp"

namespace pgst {

IntMatrix relation_matrix(const PathSpec& spec, const SupportSet& support) {
  if (support.indices.empty()) detail::fail_argument("relation_matrix: empty support");
  const auto table = theta_coordinate_table(spec.m());
  const std::size_t dim = table.front().coords.size();

  IntMatrix matrix;
  for (std::size_t row = 0; row < dim; ++row) {
    IntVector r;
    r.reserve(support.size());
    bool nonzero = false;
    for (int j : support.indices) {
      r.push_back(table[static_cast<std::size_t>(j - 1)].coords[row]);
      nonzero = nonzero || r.back() != 0;
    }
    if (nonzero) matrix.push_back(std::move(r));
  }
  matrix.emplace_back(support.size(), BigInt(1));
  return matrix;
}

IntVector RelationLattice::expand(const IntVector& relation) const {
  if (relation.size() != support.size()) detail::fail_argument("expand: relation length does not match the support");
  IntVector full(static_cast<std::size_t>(spec.n()), BigInt(0));
  for (std::size_t i = 0; i < support.size(); ++i) full[static_cast<std::size_t>(support[i] - 1)] = relation[i];
  return full;
}

RelationLattice relation_lattice(const PathSpec& spec, int a) {
  SupportSet support = eigenvalue_support(spec, a);
  const IntMatrix matrix = relation_matrix(spec, support);

  RelationLattice lattice{spec, a, std::move(support.indices), integer_kernel(matrix)};
  lll_reduce(lattice.basis);

  for (const auto& relation : lattice.basis) {
    for (const auto& row : matrix) {
      BigInt s = 0;
      for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * relation[k];
      if (s != 0) throw InvariantViolation("relation_lattice: basis vector violates a constraint");
    }
  }
  return lattice;
}

}  // namespace pgst
