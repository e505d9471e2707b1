#include "pgst/relation_lattice.hpp"

#include <algorithm>

namespace pgst {
namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// round(num / den) for den > 0, halves rounded up.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt twice = 2 * num + den;
  BigInt twice_den = 2 * den;
  BigInt q = twice / twice_den;
  if (twice % twice_den != 0 && twice < 0) --q;  // floor for negatives
  return q;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& matrix) {
  if (matrix.empty() || matrix.front().empty()) detail::fail_argument("integer_kernel: empty matrix");
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) detail::fail_argument("integer_kernel: ragged matrix");
  }

  // Column k of [M; I] as one vector: entries 0..rows-1 from M, then the
  // running unimodular transform.
  std::vector<IntVector> column(cols, IntVector(rows + cols));
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t i = 0; i < rows; ++i) column[k][i] = matrix[i][k];
    column[k][rows + k] = 1;
  }

  auto subtract_multiple = [&](std::size_t target, std::size_t source, const BigInt& q) {
    for (std::size_t e = 0; e < rows + cols; ++e) {
      if (column[source][e] != 0) column[target][e] -= q * column[source][e];
    }
  };

  // Column echelon form by Euclidean reduction along each row. Pivoting rule:
  // smallest nonzero magnitude, lowest column index on ties.
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < rows && pivot < cols; ++i) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t k = pivot; k < cols; ++k) {
        if (column[k][i] == 0) continue;
        if (best == cols || abs_value(column[k][i]) < abs_value(column[best][i])) best = k;
      }
      if (best == cols) break;
      std::swap(column[pivot], column[best]);
      bool clean = true;
      for (std::size_t k = pivot + 1; k < cols; ++k) {
        if (column[k][i] == 0) continue;
        subtract_multiple(k, pivot, column[k][i] / column[pivot][i]);
        if (column[k][i] != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }

  std::vector<IntVector> kernel;
  for (std::size_t k = pivot; k < cols; ++k) {
    kernel.emplace_back(column[k].begin() + static_cast<std::ptrdiff_t>(rows), column[k].end());
  }
  return kernel;
}

void lll_reduce(std::vector<IntVector>& basis) {
  // Integral LLL after Cohen, "A Course in Computational Algebraic Number
  // Theory", Algorithm 2.6.7. d and lambda are kept 1-based.
  const std::size_t count = basis.size();
  if (count < 2) return;

  std::vector<BigInt> d(count + 1);
  std::vector<std::vector<BigInt>> lambda(count + 1, std::vector<BigInt>(count + 1));
  auto b = [&](std::size_t i) -> IntVector& { return basis[i - 1]; };

  auto redi = [&](std::size_t k, std::size_t l) {
    if (abs_value(2 * lambda[k][l]) <= d[l]) return;
    const BigInt q = round_div(lambda[k][l], d[l]);
    IntVector& bk = b(k);
    const IntVector& bl = b(l);
    for (std::size_t e = 0; e < bk.size(); ++e) bk[e] -= q * bl[e];
    lambda[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lambda[k][i] -= q * lambda[l][i];
  };

  std::size_t kmax = 1;
  auto swapi = [&](std::size_t k) {
    std::swap(b(k), b(k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
    const BigInt lam = lambda[k][k - 1];
    const BigInt big = (d[k - 2] * d[k] + lam * lam) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lambda[i][k];
      lambda[i][k] = (d[k] * lambda[i][k - 1] - lam * t) / d[k - 1];
      lambda[i][k - 1] = (big * t + lam * lambda[i][k]) / d[k];
    }
    d[k - 1] = big;
  };

  d[0] = 1;
  d[1] = dot(b(1), b(1));
  std::size_t k = 2;
  while (k <= count) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        BigInt u = dot(b(k), b(j));
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lambda[k][i] * lambda[j][i]) / d[i - 1];
        if (j < k) {
          lambda[k][j] = u;
        } else {
          if (u == 0) throw InvariantViolation("lll_reduce: basis vectors are linearly dependent");
          d[k] = u;
        }
      }
    }
    redi(k, k - 1);
    // Lovasz condition with delta = 3/4, scaled by 4 to stay integral.
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lambda[k][k - 1] * lambda[k][k - 1]) {
      swapi(k);
      k = std::max<std::size_t>(2, k - 1);
      continue;
    }
    for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
    ++k;
  }
}

}  // namespace pgst
