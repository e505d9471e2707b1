#include "pgst/cyclotomic.hpp"
#include "pgst/mp_real.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <thread>

using namespace pgst;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
  IntVector c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

int mobius(long n) {
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Independent route: Phi_N = prod_{d | N} (x^d - 1)^mu(N/d).
IntPoly mobius_cyclotomic(long order) {
  IntPoly num = poly({1});
  IntPoly den = poly({1});
  for (long d = 1; d <= order; ++d) {
    if (order % d != 0) continue;
    const IntPoly factor = IntPoly::monomial(static_cast<int>(d)) - poly({1});
    const int mu = mobius(order / d);
    if (mu == 1) num = num * factor;
    if (mu == -1) den = den * factor;
  }
  auto [q, r] = num.divmod_monic(den);
  REQUIRE(r.is_zero());
  return q;
}

long totient_by_count(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

// Evaluate power-basis coordinates at zeta = exp(2 pi i / order).
std::pair<MpReal, MpReal> evaluate(const CycloCoordinates& c, unsigned bits) {
  MpReal re(bits), im(bits);
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    MpReal angle = MpReal::pi(bits + 20);
    angle *= static_cast<long>(2 * i);
    angle /= c.order;
    MpReal coeff(c.coords[i].convert_to<long>(), bits);
    re += coeff * cos(angle);
    im += coeff * sin(angle);
  }
  return {re, im};
}

}  // namespace

TEST_CASE("IntPoly arithmetic and formatting") {
  const IntPoly p = poly({1, 0, -1});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "-x^2 + 1");
  CHECK(IntPoly().degree() == -1);
  CHECK(poly({0, 0}).is_zero());
  CHECK((p - p).is_zero());
  CHECK((poly({-1, 1}) * poly({1, 1})) == poly({-1, 0, 1}));
  auto [q, r] = poly({1, 0, 0, 1}).divmod_monic(poly({1, 1}));
  CHECK(q == poly({1, -1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(p.divmod_monic(poly({1, 2})), InvalidArgument);
}

TEST_CASE("cyclotomic polynomial examples") {
  CHECK(cyclotomic_poly(24) == poly({1, 0, 0, 0, -1, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(24).to_string() == "x^8 - x^4 + 1");
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(12) == mobius_cyclotomic(12));
  CHECK_THROWS_AS(cyclotomic_poly(0), InvalidArgument);
}

TEST_CASE("Phi_N divides x^N - 1, has degree phi(N), and matches the Mobius product for N <= 256") {
  for (long order = 1; order <= 256; ++order) {
    const IntPoly phi = cyclotomic_poly(order);
    CHECK(phi.is_monic());
    CHECK(phi.degree() == totient_by_count(order));
    CHECK(euler_phi(order) == totient_by_count(order));
    const IntPoly xn1 = IntPoly::monomial(static_cast<int>(order)) - poly({1});
    CHECK(xn1.divmod_monic(phi).second.is_zero());
    if (order <= 120) CHECK(phi == mobius_cyclotomic(order));
  }
}

TEST_CASE("closed form for Phi_{2^(k+1) p}") {
  for (int k = 0; k <= 5; ++k) {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
      IntVector c(static_cast<std::size_t>((1 << k) * (p - 1)) + 1);
      for (long i = 0; i < p; ++i) c[static_cast<std::size_t>((1 << k) * i)] = (i % 2 == 0) ? 1 : -1;
      CHECK(cyclotomic_poly((2L << k) * p) == IntPoly(c));
    }
  }
}

TEST_CASE("reduction modulo Phi_N") {
  CHECK(reduce_mod_cyclotomic(cyclotomic_poly(30), 30).is_zero());
  const auto c = reduce_mod_cyclotomic(IntPoly::monomial(8), 24);
  CHECK(c.order == 24);
  CHECK(c.coords == IntVector{-1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(reduce_mod_cyclotomic(poly({0, 1, 0, 1}), 4).is_zero());
  CHECK(reduce_mod_cyclotomic(poly({5}), 7).coords.size() == 6);
}

TEST_CASE("theta coordinates examples") {
  CHECK(theta_coordinates(2, 1).is_zero());
  CHECK(theta_coordinates(4, 1).coords == IntVector{0, 1, 0, -1});

  const auto c = theta_coordinates(12, 2);
  auto [re, im] = evaluate(c, 128);
  CHECK(std::fabs(re.to_double() - std::sqrt(3.0)) < 1e-12);
  CHECK(std::fabs(im.to_double()) < 1e-12);

  CHECK_THROWS_AS(theta_coordinates(4, 0), InvalidArgument);
  CHECK_THROWS_AS(theta_coordinates(4, 4), InvalidArgument);
}

TEST_CASE("theta coordinates evaluate to 2cos(j pi/m) for m <= 40 at 128 bits") {
  const MpReal tol(1e-20, 128);
  for (long m = 2; m <= 40; ++m) {
    const auto table = theta_coordinate_table(m);
    for (long j = 1; j < m; ++j) {
      const auto c = theta_coordinates(m, j);
      CHECK(c == table[static_cast<std::size_t>(j - 1)]);
      auto [re, im] = evaluate(c, 128);
      MpReal angle = MpReal::pi(148);
      angle *= j;
      angle /= m;
      MpReal expected = cos(angle);
      expected *= 2L;
      if (!(abs(re - expected) < tol) || !(abs(im) < tol)) FAIL("m=" << m << " j=" << j);
    }
  }
}

TEST_CASE("concurrent cyclotomic lookups agree") {
  std::vector<IntPoly> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&results, i] { results[i] = cyclotomic_poly(2 * 3 * 5 * 7 * 2); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == mobius_cyclotomic(420));
}
