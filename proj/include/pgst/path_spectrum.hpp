#pragma once

// Closed-form spectral data of the path graph P_n under its adjacency matrix.
//
// Eigenvalues are theta_j = 2cos(pi j / m) with m = n + 1, indexed j = 1..n in
// strictly decreasing order. The (unnormalized) theta_j-eigenvector has entry
// sin(k j pi / m) at vertex k; its squared norm is m/2, so the spectral
// idempotent is (E_j)_{ab} = (2/m) sin(a j pi/m) sin(b j pi/m).

#include "pgst/mp_real.hpp"

#include <cstdint>
#include <vector>

namespace pgst {

/// The path on vertices 1..n, vertex a adjacent to a + 1.
class PathSpec {
 public:
  /// Throws InvalidArgument for n < 1.
  explicit PathSpec(int n);

  int n() const { return n_; }
  int m() const { return n_ + 1; }
  bool has_vertex(int v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const PathSpec&, const PathSpec&) = default;

 private:
  int n_;
};

/// Exact descriptor of theta_j = 2cos(pi j / m).
struct PathEigenvalue {
  int index;
  int modulus;

  MpReal value(unsigned bits = kDefaultPrecisionBits) const;
  double approx() const;
};

struct SupportSet {
  int vertex = 0;
  std::vector<int> indices;  // ascending

  bool contains(int j) const;
  std::size_t size() const { return indices.size(); }
};

/// sigma_j for j in the support of `vertex`, paired with b = n + 1 - vertex.
/// bits[i] belongs to indices[i].
struct SigmaVector {
  int vertex = 0;
  std::vector<int> indices;
  std::vector<std::uint8_t> bits;

  /// Throws InvalidArgument if j is not in the support.
  int at(int j) const;
};

std::vector<PathEigenvalue> eigenvalues(const PathSpec& spec);

/// sin(k j pi / m), the unnormalized eigenvector entry. Throws on out-of-range j or k.
MpReal eigenvector_entry(const PathSpec& spec, int j, int k, unsigned bits = kDefaultPrecisionBits);

/// (E_j)_{ab} = (2/m) sin(a j pi/m) sin(b j pi/m).
MpReal idempotent_entry(const PathSpec& spec, int j, int a, int b, unsigned bits = kDefaultPrecisionBits);

/// {j : m does not divide a*j}. Integer arithmetic only.
SupportSet eigenvalue_support(const PathSpec& spec, int a);

/// True iff a + b = n + 1.
bool strong_cospectral(const PathSpec& spec, int a, int b);

/// sigma_j = 1 for even j, 0 for odd j, over the support of a.
SigmaVector sigma_vector(const PathSpec& spec, int a);

/// sin(r pi / m) at `bits` precision with r reduced exactly modulo 2m first.
MpReal sin_pi_fraction(long r, long m, unsigned bits);
/// 2cos(r pi / m), same exact reduction.
MpReal two_cos_pi_fraction(long r, long m, unsigned bits);

}  // namespace pgst
