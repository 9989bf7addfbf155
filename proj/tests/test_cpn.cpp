#include <doctest.h>

#include "oracles.hpp"
#include "qdr/cpn.hpp"

using namespace qdr;

namespace {

RingElement element(int n, std::vector<std::pair<int, Laurent>> parts) {
  RingElement c(static_cast<std::size_t>(n) + 1);
  for (auto& [j, p] : parts) c[j] += p;
  return c;
}

Laurent h(int e, const Rational& c = 1) { return hpow(e, c); }

}  // namespace

TEST_CASE("structure constants: printed low-order entries") {
  const CPnRing r1 = cpn_structure_constants(1);
  CHECK(r1.table.at({1, 1}) == element(1, {{1, h(1, 2)}, {0, h(2, -1)}}));

  const CPnRing r2 = cpn_structure_constants(2);
  CHECK(r2.table.at({1, 1}) == element(2, {{2, Laurent(1)}, {1, h(1, 2)}, {0, h(2, -2)}}));
  CHECK(r2.table.at({1, 2}) == element(2, {{2, h(1, 4)}, {1, h(2, -2)}}));
}

TEST_CASE("structure constants agree with the commutative u-ring") {
  for (int n = 1; n <= 5; ++n) {
    const CPnRing ring = cpn_structure_constants(n);
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        const auto prod = oracle::u_multiply(oracle::u_omega_power(n, k), oracle::u_omega_power(n, l));
        // the product of symmetric elements is symmetric
        for (const auto& [m, c] : prod) CHECK(prod.at((1U << __builtin_popcount(m)) - 1) == c);
        CHECK(ring.table.at({k, l}) == oracle::u_to_omega_basis(prod, n));
      }
    CHECK(ring.symmetric());
    CHECK(ring.classical_limit_ok());
    CHECK(ring.band_ok());
    CHECK(table_associative(ring, n + 2));
  }
}

TEST_CASE("omega coordinates round-trip") {
  const int n = 3;
  const RingElement x = element(n, {{3, h(0, 2)}, {1, h(1, -1)}, {0, h(-1, Rational(1, 3))}});
  const auto back = omega_coordinates(ring_to_form(x, n), n);
  REQUIRE(back);
  CHECK(*back == x);
  CHECK_FALSE(omega_coordinates(e_form(6, {1, 2}), n));
}

TEST_CASE("nilpotency of omega - n h") {
  for (int n = 1; n <= 4; ++n) {
    const auto rep = verify_nilpotency(n);
    INFO("n = " << n);
    CHECK(rep.omega_h_literal);
    CHECK(rep.top_power_vanishes);
    CHECK(rep.previous_power_nonzero);
  }
  // the same statement inside the u-ring: (sum (u_i - h))^{n+1} = 0
  for (int n = 1; n <= 4; ++n) {
    oracle::URing x = oracle::u_omega_power(n, 1);
    x[0] += h(1, -n);
    oracle::URing p{{0U, Laurent(1)}};
    for (int k = 0; k < n; ++k) p = oracle::u_multiply(p, x);
    CHECK_FALSE(p.empty());
    CHECK(oracle::u_multiply(p, x).empty());
  }
}

TEST_CASE("expansion of the (n+1)-th power of omega") {
  const auto e1 = omega_power_expansion(1);
  CHECK(e1.matches_printed());
  CHECK(e1.matches_binomial());
  CHECK(e1.computed == element(1, {{1, h(1, 2)}, {0, h(2, -1)}}));

  // (omega)^3_h = 6h omega^2 - 4h^3 at n = 2 (omega^2 here the classical power)
  const auto e2 = omega_power_expansion(2);
  CHECK(e2.matches_binomial());
  CHECK_FALSE(e2.matches_printed());
  CHECK(e2.computed == element(2, {{2, h(1, 6)}, {0, h(3, -4)}}));

  for (int n = 1; n <= 4; ++n) {
    const auto e = omega_power_expansion(n);
    CHECK(e.matches_binomial());
    CHECK(e.matches_printed() == (n == 1));
    for (const auto& c : e.computed) CHECK(coeff(c, 0) == 0);  // omega^{n+1} = 0 classically
  }
}

TEST_CASE("three-term recursion for omega times omega^k") {
  const auto rows2 = derived_recursion_report(2);
  REQUIRE(rows2.size() == 2);
  CHECK(rows2[0].a == 2);
  CHECK(rows2[0].b == -2);
  CHECK(rows2[0].b == rows2[0].printed_b());
  CHECK(rows2[1].a == 4);
  CHECK(rows2[1].b == -2);
  CHECK(rows2[1].b != rows2[1].printed_b());

  for (int n = 1; n <= 5; ++n)
    for (const auto& row : derived_recursion_report(n)) {
      CHECK(row.a == row.printed_a());
      CHECK(row.b == row.derived_b());
      if (row.k == 1) CHECK(row.b == -n);
    }
}

TEST_CASE("first Chern shift") {
  for (int n = 1; n <= 4; ++n) {
    const auto rep = first_chern_shift(n);
    REQUIRE(rep.lambda);
    CHECK(rep.unique);
    CHECK(*rep.lambda == -n);
  }
}

TEST_CASE("ring elements print as h-polynomial coefficients") {
  const CPnRing r1 = cpn_structure_constants(1);
  const std::string s = to_string(r1.table.at({1, 1}));
  CHECK(s.find("w^1") != std::string::npos);
  CHECK(s.find("h") != std::string::npos);
}
