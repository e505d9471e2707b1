#include "pgst/oracle.hpp"

#include "pgst/cyclotomic.hpp"
#include "pgst/decider.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace pgst {
namespace {

using Rational = boost::multiprecision::cpp_rational;
using Signature = std::vector<std::int64_t>;

// Machine-word coordinate columns of theta_j over the support, plus a
// trailing 1 for the sum constraint.
std::vector<Signature> signature_columns(const PathSpec& spec, const SupportSet& support) {
  const auto table = theta_coordinate_table(spec.m());
  std::vector<Signature> columns;
  for (int j : support.indices) {
    const auto& coords = table[static_cast<std::size_t>(j - 1)].coords;
    Signature col;
    col.reserve(coords.size() + 1);
    for (const auto& c : coords) {
      if (boost::multiprecision::abs(c) > (BigInt(1) << 40)) {
        throw InvariantViolation("oracle: eigenvalue coordinate too large for enumeration");
      }
      col.push_back(c.convert_to<std::int64_t>());
    }
    col.push_back(1);
    columns.push_back(std::move(col));
  }
  return columns;
}

std::uint64_t count_points(std::size_t length, int bound, std::uint64_t cap) {
  std::uint64_t total = 1;
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < length; ++i) {
    if (total > cap / side) return cap + 1;
    total *= side;
  }
  return total;
}

// Lexicographic odometer over [-bound, bound]^length, calling visit(v).
template <typename Visit>
void enumerate_box(std::size_t length, int bound, Visit&& visit) {
  std::vector<int> v(length, -bound);
  while (true) {
    visit(v);
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (v[pos] < bound) {
        ++v[pos];
        break;
      }
      v[pos] = -bound;
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

Signature partial_signature(const std::vector<int>& v, const std::vector<Signature>& columns, std::size_t offset) {
  Signature sig(columns.front().size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Signature& col = columns[offset + i];
    for (std::size_t r = 0; r < sig.size(); ++r) sig[r] += v[i] * col[r];
  }
  return sig;
}

}  // namespace

bool verify_relation(const PathSpec& spec, int a, const IntVector& relation) {
  const SupportSet support = eigenvalue_support(spec, a);
  if (relation.size() != support.size()) {
    detail::fail_argument("verify_relation: expected " + std::to_string(support.size()) + " entries, got " +
                          std::to_string(relation.size()));
  }
  BigInt total = 0;
  for (const auto& x : relation) total += x;
  if (total != 0) return false;

  CycloCoordinates sum{2L * spec.m(), IntVector(static_cast<std::size_t>(euler_phi(2L * spec.m())))};
  for (std::size_t i = 0; i < relation.size(); ++i) {
    sum.add_scaled(theta_coordinates(spec.m(), support.indices[i]), relation[i]);
  }
  return sum.is_zero();
}

std::vector<BruteForceRelation> brute_force_relations(const PathSpec& spec, int a, int bound,
                                                      std::uint64_t max_candidates) {
  if (bound < 1) detail::fail_argument("brute_force_relations: bound must be at least 1");
  const SupportSet support = eigenvalue_support(spec, a);
  const std::size_t s = support.size();
  const std::size_t left_len = s / 2;
  const std::size_t right_len = s - left_len;

  const std::uint64_t left_count = count_points(left_len, bound, max_candidates);
  const std::uint64_t right_count = count_points(right_len, bound, max_candidates);
  if (left_count > max_candidates || right_count > max_candidates || left_count + right_count > max_candidates) {
    detail::fail_argument("brute_force_relations: enumeration exceeds " + std::to_string(max_candidates) +
                          " candidates");
  }

  const auto columns = signature_columns(spec, support);

  std::map<Signature, std::vector<std::vector<int>>> left_by_signature;
  enumerate_box(left_len, bound, [&](const std::vector<int>& v) {
    left_by_signature[partial_signature(v, columns, 0)].push_back(v);
  });

  std::vector<std::vector<int>> found;
  enumerate_box(right_len, bound, [&](const std::vector<int>& v) {
    Signature need = partial_signature(v, columns, left_len);
    for (auto& x : need) x = -x;
    auto it = left_by_signature.find(need);
    if (it == left_by_signature.end()) return;
    for (const auto& left : it->second) {
      std::vector<int> full = left;
      full.insert(full.end(), v.begin(), v.end());
      found.push_back(std::move(full));
    }
  });
  std::sort(found.begin(), found.end());

  std::vector<BruteForceRelation> out;
  out.reserve(found.size());
  for (const auto& v : found) {
    BruteForceRelation rel;
    rel.support = support.indices;
    rel.relation.assign(v.begin(), v.end());
    rel.verified = verify_relation(spec, a, rel.relation);
    if (!rel.verified) throw InvariantViolation("brute_force_relations: signature match failed exact verification");
    out.push_back(std::move(rel));
  }
  return out;
}

bool mirror_identity_check(const PathSpec& spec, int a) {
  if (!in_internal_pgst_family(spec.n(), a)) {
    detail::fail_argument("mirror_identity_check: (n, a) = (" + std::to_string(spec.n()) + ", " + std::to_string(a) +
                          ") is not of the form n = 2^t p - 1 with 2^(t-1) | a");
  }
  const RelationLattice lattice = relation_lattice(spec, a);
  const int m = spec.m();
  for (const auto& relation : lattice.basis) {
    const IntVector full = lattice.expand(relation);
    for (int j : lattice.support) {
      if (j % 2 != 0) continue;
      if (full[static_cast<std::size_t>(j - 1)] != full[static_cast<std::size_t>(m - j - 1)]) return false;
    }
  }
  return true;
}

LatticeMembership::LatticeMembership(const std::vector<IntVector>& basis, std::size_t dimension)
    : rank_(basis.size()), dimension_(dimension) {
  // Row-reduce [B^T | I] over the rationals; the right block is the transform.
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> work(dimension, std::vector<Rational>(k + dimension));
  for (std::size_t r = 0; r < dimension; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (basis[c].size() != dimension) detail::fail_argument("LatticeMembership: basis vector length mismatch");
      work[r][c] = Rational(basis[c][r]);
    }
    work[r][k + r] = 1;
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < dimension && work[p][c] == 0) ++p;
    if (p == dimension) detail::fail_argument("LatticeMembership: basis is linearly dependent");
    std::swap(work[row], work[p]);
    const Rational inv = 1 / work[row][c];
    for (auto& x : work[row]) x *= inv;
    for (std::size_t r = 0; r < dimension; ++r) {
      if (r == row || work[r][c] == 0) continue;
      const Rational f = work[r][c];
      for (std::size_t e = 0; e < work[r].size(); ++e) work[r][e] -= f * work[row][e];
    }
    ++row;
  }
  transform_.resize(dimension);
  for (std::size_t r = 0; r < dimension; ++r) transform_[r].assign(work[r].begin() + static_cast<std::ptrdiff_t>(k), work[r].end());
}

std::optional<IntVector> LatticeMembership::coefficients(const IntVector& relation) const {
  if (relation.size() != dimension_) detail::fail_argument("LatticeMembership: relation length mismatch");
  std::vector<Rational> y(dimension_);
  for (std::size_t r = 0; r < dimension_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < dimension_; ++c) {
      if (relation[c] != 0 && transform_[r][c] != 0) s += transform_[r][c] * relation[c];
    }
    y[r] = s;
  }
  for (std::size_t r = rank_; r < dimension_; ++r) {
    if (y[r] != 0) return std::nullopt;  // outside the rational span
  }
  IntVector coeffs;
  coeffs.reserve(rank_);
  for (std::size_t r = 0; r < rank_; ++r) {
    if (boost::multiprecision::denominator(y[r]) != 1) return std::nullopt;
    coeffs.push_back(boost::multiprecision::numerator(y[r]));
  }
  return coeffs;
}

}  // namespace pgst
