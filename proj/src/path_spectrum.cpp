#include "pgst/path_spectrum.hpp"

#include "pgst/common.hpp"

#include <algorithm>
#include <string>

namespace pgst {
namespace {

void require_vertex(const PathSpec& spec, int v, const char* name) {
  if (!spec.has_vertex(v)) {
    detail::fail_argument(std::string(name) + " = " + std::to_string(v) + " is outside 1.." +
                          std::to_string(spec.n()));
  }
}

// Reduce r into [0, 2m).
long reduce_mod(long r, long modulus) {
  long out = r % modulus;
  return out < 0 ? out + modulus : out;
}

}  // namespace

PathSpec::PathSpec(int n) : n_(n) {
  if (n < 1) detail::fail_argument("path must have at least one vertex, got n = " + std::to_string(n));
}

MpReal PathEigenvalue::value(unsigned bits) const { return two_cos_pi_fraction(index, modulus, bits); }

double PathEigenvalue::approx() const { return value(64).to_double(); }

bool SupportSet::contains(int j) const { return std::binary_search(indices.begin(), indices.end(), j); }

int SigmaVector::at(int j) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), j);
  if (it == indices.end() || *it != j) {
    detail::fail_argument("index " + std::to_string(j) + " is not in the eigenvalue support");
  }
  return bits[static_cast<std::size_t>(it - indices.begin())];
}

MpReal sin_pi_fraction(long r, long m, unsigned bits) {
  // Guard bits absorb the rounding of pi * r / m.
  const unsigned work = bits + 16;
  const long reduced = reduce_mod(r, 2 * m);
  if (reduced == 0 || reduced == m) return MpReal(0L, bits);
  MpReal angle = MpReal::pi(work);
  angle *= reduced;
  angle /= m;
  MpReal out(bits);
  mpfr_sin(out.raw(), angle.raw(), MPFR_RNDN);
  return out;
}

MpReal two_cos_pi_fraction(long r, long m, unsigned bits) {
  const unsigned work = bits + 16;
  const long reduced = reduce_mod(r, 2 * m);
  // cos vanishes exactly at pi/2 and 3pi/2.
  if (2 * reduced == m || 2 * reduced == 3 * m) return MpReal(0L, bits);
  MpReal angle = MpReal::pi(work);
  angle *= reduced;
  angle /= m;
  MpReal out(bits);
  mpfr_cos(out.raw(), angle.raw(), MPFR_RNDN);
  out *= 2L;
  return out;
}

std::vector<PathEigenvalue> eigenvalues(const PathSpec& spec) {
  std::vector<PathEigenvalue> out;
  out.reserve(static_cast<std::size_t>(spec.n()));
  for (int j = 1; j <= spec.n(); ++j) out.push_back({j, spec.m()});
  return out;
}

MpReal eigenvector_entry(const PathSpec& spec, int j, int k, unsigned bits) {
  require_vertex(spec, j, "eigenvalue index j");
  require_vertex(spec, k, "vertex k");
  return sin_pi_fraction(static_cast<long>(k) * j, spec.m(), bits);
}

MpReal idempotent_entry(const PathSpec& spec, int j, int a, int b, unsigned bits) {
  require_vertex(spec, j, "eigenvalue index j");
  require_vertex(spec, a, "vertex a");
  require_vertex(spec, b, "vertex b");
  MpReal out = sin_pi_fraction(static_cast<long>(a) * j, spec.m(), bits + 8);
  out *= sin_pi_fraction(static_cast<long>(b) * j, spec.m(), bits + 8);
  out *= 2L;
  out /= spec.m();
  MpReal rounded(bits);
  mpfr_set(rounded.raw(), out.raw(), MPFR_RNDN);
  return rounded;
}

SupportSet eigenvalue_support(const PathSpec& spec, int a) {
  require_vertex(spec, a, "vertex a");
  SupportSet out;
  out.vertex = a;
  for (int j = 1; j <= spec.n(); ++j) {
    if ((static_cast<long>(a) * j) % spec.m() != 0) out.indices.push_back(j);
  }
  return out;
}

bool strong_cospectral(const PathSpec& spec, int a, int b) {
  require_vertex(spec, a, "vertex a");
  require_vertex(spec, b, "vertex b");
  return a + b == spec.m();
}

SigmaVector sigma_vector(const PathSpec& spec, int a) {
  // sin((m - a) j pi / m) = (-1)^(j+1) sin(a j pi / m): the projections onto
  // a and its mirror agree for odd j and are opposite for even j.
  SupportSet support = eigenvalue_support(spec, a);
  SigmaVector out;
  out.vertex = a;
  out.indices = std::move(support.indices);
  out.bits.reserve(out.indices.size());
  for (int j : out.indices) out.bits.push_back(j % 2 == 0 ? 1 : 0);
  return out;
}

}  // namespace pgst
