#include <doctest.h>

#include "oracles.hpp"
#include "qdr/matrix.hpp"
#include "qdr/poly.hpp"
#include "qdr/random.hpp"
#include "qdr/rational.hpp"

using namespace qdr;

TEST_CASE("rationals print and parse as p/q") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("gaussian rationals") {
  const Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(-1));
  CHECK(Gaussian(1) / i == -i);
  CHECK(to_string(Gaussian(Rational(1, 2), Rational(-3))) == "1/2-3*i");
  CHECK(parse_gaussian("1/2-3*i") == Gaussian(Rational(1, 2), Rational(-3)));
  CHECK(parse_gaussian(to_string(Gaussian(0, Rational(2, 7)))) == Gaussian(0, Rational(2, 7)));
}

TEST_CASE("laurent polynomials in h") {
  const Laurent a = hpow(1, 2) - hpow(2);  // 2h - h^2
  CHECK(coeff(a, 1) == 2);
  CHECK(min_exponent(a) == 1);
  CHECK(max_exponent(a) == 2);
  CHECK(evaluate(a, 3) == -3);
  const Laurent inv = hpow(-1);
  CHECK(inv * hpow(1) == Laurent(1));
  CHECK_FALSE(is_polynomial(inv));
  CHECK(to_string(Laurent()) == "0");
}

TEST_CASE("multi-parameter specialization of h_j") {
  // h_1 + 2 h_2 with h_1 := 3t, h_2 := -t gives t
  const MultiH p = MultiH::monomial(hvec_unit(0)) + MultiH::monomial(hvec_unit(1), 2);
  CHECK(specialize(p, {3, -1}) == hpow(1));
}

TEST_CASE("coefficient functions differentiate exactly") {
  const Fn f = fn_x(1) * fn_x(1) * fn_x(2);
  CHECK(partial(f, 1) == Fn(2) * fn_x(1) * fn_x(2));
  CHECK(partial(f, 3).is_zero());
  // d/dx of exp(2 pi i k x) brings down tau * i * k
  const Fn m = fn_mode({3, 0});
  const Fn dm = partial(m, 1);
  FnMono mono = m.terms().begin()->first;
  mono.tau = 1;
  CHECK(dm == Fn::monomial(mono, Gaussian(0, 3)));
}

TEST_CASE("characteristic polynomial examples") {
  const RMatrix id = RMatrix::identity(2);
  CHECK(char_poly(id) == UPoly::linear(-1).pow(2));

  // The 2x2 case by hand: lambda^2 - tr lambda + det.
  const RMatrix m{{Rational(0), Rational(1)}, {Rational(1), Rational(2)}};
  CHECK(char_poly(m) == UPoly({Rational(-1), Rational(-2), Rational(1)}));
  CHECK(determinant(m) == Rational(0) * 2 - Rational(1) * 1);

  // p(0) = (-1)^n det
  const RMatrix b{{Rational(2), Rational(1), Rational(0)},
                  {Rational(-1), Rational(3), Rational(5)},
                  {Rational(4), Rational(0), Rational(1, 2)}};
  CHECK(char_poly(b)(0) == -determinant(b));
}

TEST_CASE("characteristic polynomial agrees with Faddeev-LeVerrier on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(1, 6);
    RMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.rational();
    CHECK(char_poly(a).coeffs() == UPoly(oracle::faddeev_leverrier(a)).coeffs());
  }
}

TEST_CASE("rank by rows and by columns agree; inverse and solve") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = rng.uniform(1, 5), c = rng.uniform(1, 5);
    RMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = rng.coin() ? rng.rational() : Rational(0);
    CHECK(rank(a) == rank_by_columns(a));
  }
  const RMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(a * inverse(a) == RMatrix::identity(2));
  const auto x = solve(a, {Rational(3), Rational(2)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_THROWS_AS(inverse(RMatrix(2, 2)), std::domain_error);
}

TEST_CASE("rational root factorization") {
  // (l - 1)^2 (l^2 - 2)
  const UPoly p = UPoly::linear(-1).pow(2) * UPoly({Rational(-2), Rational(0), Rational(1)});
  const auto f = factor_rational_roots(p);
  REQUIRE(f.rational_roots.size() == 1);
  CHECK(f.rational_roots[0].first == 1);
  CHECK(f.rational_roots[0].second == 2);
  CHECK(f.remainder == UPoly({Rational(-2), Rational(0), Rational(1)}));
}
