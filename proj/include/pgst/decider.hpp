#pragma once

// Exact decision of pretty good state transfer between two vertices of P_n.
//
// For a + b = n + 1, transfer is pretty good iff every integer relation l on
// the eigenvalue support of a (sum l_j theta_j = 0, sum l_j = 0) has an even
// sigma-weight sum l_j sigma_j. That weight is additive mod 2, so checking a
// lattice basis decides it.

#include "pgst/common.hpp"
#include "pgst/path_spectrum.hpp"
#include "pgst/relation_lattice.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pgst {

enum class Answer { yes, no };

enum class Reason { not_cospectral, parity_violation, all_parities_even, trivial_same_vertex };

std::string_view to_string(Answer answer);
std::string_view to_string(Reason reason);
/// Inverse of to_string; throws InvalidArgument on unknown names.
Answer parse_answer(std::string_view text);
Reason parse_reason(std::string_view text);

struct BasisParity {
  IntVector relation;  // indexed like the support
  int parity = 0;
};

struct PgstVerdict {
  int n = 0;
  int a = 0;
  int b = 0;
  Answer answer = Answer::no;
  Reason reason = Reason::not_cospectral;
  std::vector<int> support;          // empty unless the lattice was built
  std::optional<IntVector> witness;  // present iff reason == parity_violation
  std::vector<BasisParity> parities; // filled when answer == yes via parities
};

/// sum l_j sigma_j mod 2, with l indexed like sigma.indices.
int relation_parity(const IntVector& relation, const SigmaVector& sigma);

/// Throws InvalidArgument for out-of-range vertices.
PgstVerdict decide_pgst(const PathSpec& spec, int a, int b);

/// Parity test on an arbitrary generating set of the relation lattice of
/// (lattice.vertex, n + 1 - lattice.vertex).
PgstVerdict decide_from_lattice(const RelationLattice& lattice, const SigmaVector& sigma);

bool is_prime(long value);

/// n + 1 is prime, twice an odd prime, or a power of two. Requires n >= 2.
bool end_vertex_rule(int n);

/// n + 1 = 2^t p with p an odd prime, t >= 1, and 2^(t-1) divides a.
/// False (never throws) outside 1 <= a <= n or for n < 2.
bool in_internal_pgst_family(int n, int a);

}  // namespace pgst
