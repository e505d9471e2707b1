#include "pgst/decider.hpp"
#include "pgst/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pgst;

namespace {

IntVector ints(std::initializer_list<long> values) {
  IntVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<IntVector> relations_of(const std::vector<BruteForceRelation>& found) {
  std::vector<IntVector> out;
  for (const auto& r : found) out.push_back(r.relation);
  return out;
}

// Plain lexicographic enumeration of the whole box, each candidate checked
// with verify_relation.
std::vector<IntVector> naive_relations(const PathSpec& spec, int a, int bound) {
  const std::size_t len = eigenvalue_support(spec, a).size();
  std::vector<IntVector> out;
  std::vector<long> v(len, -bound);
  while (true) {
    IntVector candidate(v.begin(), v.end());
    if (verify_relation(spec, a, candidate)) out.push_back(candidate);
    std::size_t pos = len;
    bool done = true;
    while (pos-- > 0) {
      if (v[pos] < bound) {
        ++v[pos];
        done = false;
        break;
      }
      v[pos] = -bound;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

TEST_CASE("brute force examples") {
  const auto p2 = brute_force_relations(PathSpec(2), 1, 3);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].relation == ints({0, 0}));
  CHECK(p2[0].verified);

  const auto p3 = relations_of(brute_force_relations(PathSpec(3), 1, 2));
  CHECK(p3 == std::vector<IntVector>{ints({-1, 2, -1}), ints({0, 0, 0}), ints({1, -2, 1})});

  const auto p8 = relations_of(brute_force_relations(PathSpec(8), 1, 3));
  const IntVector target = ints({2, 0, -3, 0, 2, -3, 2, 0});
  CHECK(std::find(p8.begin(), p8.end(), target) != p8.end());
  CHECK(std::find(p8.begin(), p8.end(), ints({-2, 0, 3, 0, -2, 3, -2, 0})) != p8.end());
  CHECK(std::is_sorted(p8.begin(), p8.end()));
}

TEST_CASE("meet-in-the-middle matches naive enumeration") {
  for (int n = 1; n <= 6; ++n) {
    const PathSpec spec(n);
    for (int a = 1; a <= n; ++a) {
      CHECK(relations_of(brute_force_relations(spec, a, 2)) == naive_relations(spec, a, 2));
    }
  }
}

TEST_CASE("enumeration guard and bound checks") {
  CHECK_THROWS_AS(brute_force_relations(PathSpec(12), 1, 3, 1000), InvalidArgument);
  CHECK_THROWS_AS(brute_force_relations(PathSpec(3), 1, 0), InvalidArgument);
  CHECK_THROWS_AS(brute_force_relations(PathSpec(40), 1, 3), InvalidArgument);
}

TEST_CASE("verify_relation examples") {
  const PathSpec p3(3);
  CHECK(verify_relation(p3, 1, ints({1, -2, 1})));
  CHECK_FALSE(verify_relation(p3, 1, ints({1, -1, 0})));
  CHECK(verify_relation(p3, 1, ints({0, 0, 0})));
  CHECK(verify_relation(PathSpec(11), 2, IntVector(10, BigInt(0))));
  CHECK_THROWS_AS(verify_relation(p3, 1, ints({1, -1})), InvalidArgument);
  CHECK_THROWS_AS(verify_relation(PathSpec(11), 2, IntVector(11, BigInt(0))), InvalidArgument);
}

TEST_CASE("mirror identity on even indices") {
  CHECK(mirror_identity_check(PathSpec(11), 2));
  CHECK(mirror_identity_check(PathSpec(11), 4));
  CHECK(mirror_identity_check(PathSpec(23), 4));
  CHECK_THROWS_AS(mirror_identity_check(PathSpec(11), 3), InvalidArgument);
  CHECK_THROWS_AS(mirror_identity_check(PathSpec(8), 1), InvalidArgument);
}

TEST_CASE("brute force and lattice agree on membership and parity, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    const PathSpec spec(n);
    for (int a = 1; a <= n; ++a) {
      const auto lattice = relation_lattice(spec, a);
      const SigmaVector sigma = sigma_vector(spec, a);
      const auto found = brute_force_relations(spec, a, 3);
      const auto listed = relations_of(found);

      // Short basis vectors must appear in the enumeration.
      for (const auto& b : lattice.basis) {
        const bool small = std::all_of(b.begin(), b.end(), [](const BigInt& x) { return abs(x) <= 3; });
        if (small) CHECK(std::binary_search(listed.begin(), listed.end(), b));
      }
      if (lattice.basis.empty()) {
        CHECK(found.size() == 1);
        continue;
      }
      const LatticeMembership span(lattice.basis, lattice.support.size());
      for (const auto& rel : found) {
        const auto coeffs = span.coefficients(rel.relation);
        REQUIRE(coeffs.has_value());
        BigInt predicted = 0;
        for (std::size_t i = 0; i < coeffs->size(); ++i) {
          predicted += (*coeffs)[i] * relation_parity(lattice.basis[i], sigma);
        }
        CHECK(relation_parity(rel.relation, sigma) == static_cast<int>(abs(predicted) % 2));
      }
    }
  }
}

TEST_CASE("lattice membership rejects vectors outside the integer span") {
  const std::vector<IntVector> basis = {ints({2, 0, 0}), ints({0, 1, 1})};
  const LatticeMembership span(basis, 3);
  CHECK(span.coefficients(ints({4, 3, 3})) == IntVector{2, 3});
  CHECK_FALSE(span.coefficients(ints({1, 0, 0})).has_value());  // half-integral
  CHECK_FALSE(span.coefficients(ints({0, 1, 0})).has_value());  // outside the rational span
  CHECK_THROWS_AS(LatticeMembership({ints({1, 1}), ints({2, 2})}, 2), InvalidArgument);
}
