#pragma once

// Exact integer polynomials, cyclotomic polynomials, and coordinates of path
// eigenvalues in the power basis of the cyclotomic field Q(zeta_N).

#include "pgst/common.hpp"

#include <string>
#include <utility>

namespace pgst {

/// Polynomial with arbitrary-precision integer coefficients; coefficient i
/// multiplies x^i. Always normalized (no trailing zero coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(IntVector coefficients);

  static IntPoly monomial(int degree, BigInt coefficient = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const IntVector& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  BigInt coefficient(int i) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Quotient and remainder by a monic divisor; stays over the integers.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  std::string to_string() const;

 private:
  void normalize();
  IntVector coeffs_;
};

long euler_phi(long n);

/// Phi_N via exact division (x^N - 1) / prod_{d | N, d < N} Phi_d.
/// Results are cached process-wide; the cache is write-once per N.
/// Throws InvalidArgument for N < 1.
IntPoly cyclotomic_poly(long order);

/// Integer coordinates in the basis {1, zeta_N, ..., zeta_N^(phi(N)-1)}.
struct CycloCoordinates {
  long order = 0;
  IntVector coords;

  bool is_zero() const;
  /// this += factor * other; orders must match.
  void add_scaled(const CycloCoordinates& other, const BigInt& factor);

  friend bool operator==(const CycloCoordinates&, const CycloCoordinates&) = default;
};

/// poly mod Phi_N, padded to phi(N) coordinates.
CycloCoordinates reduce_mod_cyclotomic(const IntPoly& poly, long order);

/// Coordinates of theta_j = zeta_2m^j + zeta_2m^(2m-j) in Q(zeta_2m).
/// Requires 1 <= j <= m - 1.
CycloCoordinates theta_coordinates(long m, long j);

/// theta_coordinates(m, j) for j = 1..m-1 (entry j-1), sharing one table of
/// reduced powers of zeta_2m.
std::vector<CycloCoordinates> theta_coordinate_table(long m);

}  // namespace pgst
