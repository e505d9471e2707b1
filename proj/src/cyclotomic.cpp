#include "pgst/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pgst {

IntPoly::IntPoly(IntVector coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPoly IntPoly::monomial(int degree, BigInt coefficient) {
  IntVector c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return IntPoly(std::move(c));
}

BigInt IntPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  IntVector out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) out[i + k] += lhs.coeffs_[i] * rhs.coeffs_[k];
  }
  return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (!divisor.is_monic()) detail::fail_argument("divmod_monic: divisor must be monic");
  const int dd = divisor.degree();
  if (degree() < dd) return {IntPoly(), *this};
  IntVector rem = coeffs_;
  IntVector quot(static_cast<std::size_t>(degree() - dd) + 1);
  for (int i = degree(); i >= dd; --i) {
    const BigInt lead = rem[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = lead;
    for (int k = 0; k <= dd; ++k) {
      rem[static_cast<std::size_t>(i - dd + k)] -= lead * divisor.coeffs_[static_cast<std::size_t>(k)];
    }
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

long euler_phi(long n) {
  if (n < 1) detail::fail_argument("euler_phi: n must be positive");
  long result = n;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

namespace {

std::mutex cache_mutex;
std::map<long, IntPoly>& cache() {
  static std::map<long, IntPoly> table;
  return table;
}

}  // namespace

IntPoly cyclotomic_poly(long order) {
  if (order < 1) detail::fail_argument("cyclotomic_poly: order must be positive, got " + std::to_string(order));
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(order);
    if (it != cache().end()) return it->second;
  }

  IntPoly quotient = IntPoly::monomial(static_cast<int>(order)) - IntPoly::monomial(0);
  for (long d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    auto [q, r] = quotient.divmod_monic(cyclotomic_poly(d));
    if (!r.is_zero()) throw InvariantViolation("cyclotomic division left a remainder");
    quotient = std::move(q);
  }

  std::lock_guard lock(cache_mutex);
  return cache().emplace(order, std::move(quotient)).first->second;
}

bool CycloCoordinates::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

void CycloCoordinates::add_scaled(const CycloCoordinates& other, const BigInt& factor) {
  if (order != other.order || coords.size() != other.coords.size()) {
    detail::fail_argument("add_scaled: coordinates live in different fields");
  }
  if (factor == 0) return;
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += factor * other.coords[i];
}

CycloCoordinates reduce_mod_cyclotomic(const IntPoly& poly, long order) {
  const IntPoly modulus = cyclotomic_poly(order);
  IntPoly rem = poly.divmod_monic(modulus).second;
  CycloCoordinates out{order, rem.coefficients()};
  out.coords.resize(static_cast<std::size_t>(modulus.degree()));
  return out;
}

CycloCoordinates theta_coordinates(long m, long j) {
  if (m < 2 || j < 1 || j > m - 1) {
    detail::fail_argument("theta_coordinates: need 1 <= j <= m - 1, got m = " + std::to_string(m) +
                          ", j = " + std::to_string(j));
  }
  IntPoly poly = IntPoly::monomial(static_cast<int>(j)) + IntPoly::monomial(static_cast<int>(2 * m - j));
  return reduce_mod_cyclotomic(poly, 2 * m);
}

std::vector<CycloCoordinates> theta_coordinate_table(long m) {
  if (m < 2) detail::fail_argument("theta_coordinate_table: need m >= 2");
  const long order = 2 * m;
  const IntPoly modulus = cyclotomic_poly(order);
  const auto deg = static_cast<std::size_t>(modulus.degree());

  // powers[k] = zeta^k reduced, built by multiplying by zeta and folding the
  // overflow coefficient back through the monic modulus.
  std::vector<IntVector> powers(static_cast<std::size_t>(order));
  powers[0].assign(deg, 0);
  powers[0][0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) {
    const IntVector& prev = powers[k - 1];
    IntVector next(deg, 0);
    const BigInt overflow = prev[deg - 1];
    for (std::size_t i = deg - 1; i >= 1; --i) next[i] = prev[i - 1];
    if (overflow != 0) {
      for (std::size_t i = 0; i < deg; ++i) next[i] -= overflow * modulus.coefficients()[i];
    }
    powers[k] = std::move(next);
  }

  std::vector<CycloCoordinates> table;
  table.reserve(static_cast<std::size_t>(m - 1));
  for (long j = 1; j < m; ++j) {
    CycloCoordinates c{order, powers[static_cast<std::size_t>(j)]};
    const IntVector& mirror = powers[static_cast<std::size_t>(order - j)];
    for (std::size_t i = 0; i < deg; ++i) c.coords[i] += mirror[i];
    table.push_back(std::move(c));
  }
  return table;
}

}  // namespace pgst
