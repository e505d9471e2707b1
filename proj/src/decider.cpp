#include "pgst/decider.hpp"

#include <string>

namespace pgst {

std::string_view to_string(Answer answer) { return answer == Answer::yes ? "yes" : "no"; }

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::not_cospectral: return "not_cospectral";
    case Reason::parity_violation: return "parity_violation";
    case Reason::all_parities_even: return "all_parities_even";
    case Reason::trivial_same_vertex: return "trivial_same_vertex";
  }
  return "unknown";
}

Answer parse_answer(std::string_view text) {
  if (text == "yes") return Answer::yes;
  if (text == "no") return Answer::no;
  detail::fail_argument("unknown verdict '" + std::string(text) + "'");
}

Reason parse_reason(std::string_view text) {
  for (Reason r : {Reason::not_cospectral, Reason::parity_violation, Reason::all_parities_even,
                   Reason::trivial_same_vertex}) {
    if (to_string(r) == text) return r;
  }
  detail::fail_argument("unknown reason '" + std::string(text) + "'");
}

int relation_parity(const IntVector& relation, const SigmaVector& sigma) {
  if (relation.size() != sigma.bits.size()) detail::fail_argument("relation_parity: length mismatch with sigma");
  BigInt sum = 0;
  for (std::size_t i = 0; i < relation.size(); ++i) {
    if (sigma.bits[i] != 0) sum += relation[i];
  }
  return sum % 2 == 0 ? 0 : 1;
}

PgstVerdict decide_from_lattice(const RelationLattice& lattice, const SigmaVector& sigma) {
  if (lattice.support != sigma.indices) detail::fail_argument("decide_from_lattice: sigma and lattice supports differ");
  PgstVerdict verdict;
  verdict.n = lattice.spec.n();
  verdict.a = lattice.vertex;
  verdict.b = lattice.spec.m() - lattice.vertex;
  verdict.support = lattice.support;
  for (const auto& relation : lattice.basis) {
    const int parity = relation_parity(relation, sigma);
    if (parity != 0) {
      verdict.answer = Answer::no;
      verdict.reason = Reason::parity_violation;
      verdict.witness = relation;
      verdict.parities.clear();
      return verdict;
    }
    verdict.parities.push_back({relation, parity});
  }
  verdict.answer = Answer::yes;
  verdict.reason = Reason::all_parities_even;
  return verdict;
}

PgstVerdict decide_pgst(const PathSpec& spec, int a, int b) {
  if (!spec.has_vertex(a) || !spec.has_vertex(b)) {
    detail::fail_argument("vertices (" + std::to_string(a) + ", " + std::to_string(b) + ") must lie in 1.." +
                          std::to_string(spec.n()));
  }
  if (a == b) {
    PgstVerdict verdict;
    verdict.n = spec.n();
    verdict.a = a;
    verdict.b = b;
    verdict.answer = Answer::yes;
    verdict.reason = Reason::trivial_same_vertex;
    return verdict;
  }
  if (!strong_cospectral(spec, a, b)) {
    PgstVerdict verdict;
    verdict.n = spec.n();
    verdict.a = a;
    verdict.b = b;
    verdict.answer = Answer::no;
    verdict.reason = Reason::not_cospectral;
    return verdict;
  }
  return decide_from_lattice(relation_lattice(spec, a), sigma_vector(spec, a));
}

bool is_prime(long value) {
  if (value < 2) return false;
  for (long d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

bool end_vertex_rule(int n) {
  if (n < 2) detail::fail_argument("end_vertex_rule: need n >= 2, got " + std::to_string(n));
  const long m = n + 1L;
  if (is_prime(m)) return true;
  if (m % 2 == 0 && is_prime(m / 2)) return true;
  return (m & (m - 1)) == 0;
}

bool in_internal_pgst_family(int n, int a) {
  if (n < 2 || a < 1 || a > n) return false;
  long odd = n + 1L;
  long two_power = 1;
  while (odd % 2 == 0) {
    odd /= 2;
    two_power *= 2;
  }
  if (two_power < 2 || odd < 3 || !is_prime(odd)) return false;
  return a % (two_power / 2) == 0;
}

}  // namespace pgst
