#include <doctest.h>

#include "oracles.hpp"
#include "qdr/random.hpp"
#include "qdr/symplectic.hpp"

using namespace qdr;

namespace {

QForm e(int dim, std::vector<int> idx) { return e_form(dim, std::move(idx)); }
QForm one(int dim) { return QForm::constant(dim, 1); }

}  // namespace

TEST_CASE("bivector of the standard form") {
  const RMatrix w = bivector_of(standard_omega(1));
  CHECK(w(0, 1) == -1);
  CHECK(w(1, 0) == 1);
  const RMatrix w4 = bivector_of(standard_omega(2));
  CHECK(w4(0, 1) == -1);
  CHECK(w4(2, 3) == -1);
  CHECK(w4(0, 2) == 0);
  CHECK(w4 * standard_omega(2) == RMatrix::identity(4));
}

TEST_CASE("sharp and flat") {
  const RMatrix om = standard_omega(1);
  CHECK(sharp(om, {1, 0}) == std::vector<Rational>{0, 1});
  CHECK(sharp(om, {0, 1}) == std::vector<Rational>{-1, 0});
  CHECK(flat(om, sharp(om, {Rational(2, 3), 5})) == std::vector<Rational>{Rational(2, 3), 5});
}

TEST_CASE("contraction with the bivector") {
  for (int n = 1; n <= 3; ++n) {
    const RMatrix om = standard_omega(n);
    const RMatrix w = bivector_of(om);
    CHECK(contract_bivector(w, e(2 * n, {1, 2})) == QForm::constant(2 * n, Laurent(w(0, 1))));
    CHECK(contract_bivector(w, omega_form(om)) == QForm::constant(2 * n, Laurent(-n)));
  }
  const RMatrix om = standard_omega(2);
  const QForm omega = omega_form(om);
  // omega^2 = 2 e1234; contracting pairs (12) and (34) gives -2 (e34 + e12)
  CHECK(contract_bivector(bivector_of(om), wedge(omega, omega)) == Laurent(-2) * omega);
}

TEST_CASE("symplectic star") {
  for (int n = 1; n <= 2; ++n) {
    const RMatrix om = standard_omega(n);
    CHECK(symplectic_star(one(2 * n), om) == volume_form(om));
  }
  const RMatrix om = standard_omega(1);
  const QForm sv = symplectic_star(volume_form(om), om);
  REQUIRE(sv.form_degree() == 0);
  CHECK(sv == one(2));
  // ** is the identity on every blade, dimensions up to 6
  for (int n = 1; n <= 3; ++n) {
    const RMatrix o = standard_omega(n);
    for (Mask m : blades_by_degree(2 * n)) {
      const QForm b = QForm::from_mask(2 * n, m, Laurent(1));
      CHECK(symplectic_star(symplectic_star(b, o), o) == b);
    }
  }
  // *h = 1/h
  CHECK(symplectic_star(h_form(2), om) == Laurent(hpow(-1)) * volume_form(om));
}

TEST_CASE("Lefschetz operators on small examples") {
  const RMatrix om = standard_omega(1);
  const QForm omega = omega_form(om);
  CHECK(apply_K(e(2, {1, 2})) == Laurent(2) * e(2, {1, 2}));
  CHECK(apply_A(one(4), standard_omega(2)) == Laurent(2) * one(4));
  CHECK(apply_L(one(2), om) == omega);
  CHECK(apply_Lh(one(2), om) == omega);
  CHECK(apply_Lh(omega, om) == Laurent(hpow(1, 2)) * omega - h_form(2, 2));
  CHECK(apply_Ah(h_form(2), om) == -h_form(2));
  CHECK_THROWS(apply_A(one(2) + e(2, {1}), om));
}

TEST_CASE("decomposition and relation constants") {
  for (int n = 1; n <= 2; ++n) {
    const auto d = decomposition_report(n);
    CHECK(d.consistent);
    CHECK(d.unique);
    CHECK(d.values == std::vector<Rational>{1, 1, 1});

    const auto r = relation_report(n);
    CHECK(r.consistent);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == 1);
    CHECK(r.values[1] == -2 * n);
  }
}

TEST_CASE("classical Lefschetz relations") {
  for (int n = 1; n <= 3; ++n) {
    const auto rel = lefschetz_relations(n);
    CHECK(rel.L_K);
    CHECK(rel.Lstar_K);
    CHECK(rel.sl2_sign_found);
    CHECK(rel.sl2_sign == -1);
    CHECK(rel.star_involution);
    CHECK(rel.Kstar);
  }
}

TEST_CASE("quantum Lefschetz relations") {
  for (int n = 1; n <= 2; ++n) {
    const auto q = quantum_relations(n, -2, 2 * n + 2);
    CHECK(q.Lh_Lhstar);
    CHECK(q.Lh_Ah);
    CHECK(q.Lhstar_Ah);
    CHECK(q.Ah_h_sign == -1);
    CHECK(q.pieces_checked > 0);
  }
}

TEST_CASE("trivial operator family") {
  const OperatorTriple zero{[](const QForm& a) { return QForm(a.dim()); },
                            [](const QForm& a) { return QForm(a.dim()); },
                            [](const QForm& a) { return QForm(a.dim()); }};
  const auto ops = family_ops(zero, 1, 0, 0, 0);
  const QForm a = e(2, {1}) + h_form(2);
  CHECK(ops.Lh(a).is_zero());
  CHECK(ops.Lhstar(a).is_zero());
  CHECK(triple_is_sl2(zero, 2));
}

TEST_CASE("the Lefschetz triple is an sl2 triple") {
  for (int n = 1; n <= 2; ++n) CHECK(triple_is_sl2(lefschetz_triple(standard_omega(n)), 2 * n));
}

TEST_CASE("Lefschetz matrices") {
  CHECK(lefschetz_matrix(1, 1).matrix == RMatrix::identity(2));

  // M(1) = h^-1 omega and M(h^-1 omega) = h^-2 (2h omega - h^2) = 2 h^-1 omega - 1
  // on the basis (1, h^-1 e1^e2): columns (0, 1) and (-1, 2).
  const RMatrix m = lefschetz_matrix(1, 0).matrix;
  CHECK(m == RMatrix{{Rational(0), Rational(-1)}, {Rational(1), Rational(2)}});
  CHECK(char_poly(m) == UPoly::linear(-1).pow(2));

  for (int n = 1; n <= 3; ++n)
    for (int parity : {0, 1}) {
      const RMatrix mp = lefschetz_matrix(n, parity).matrix;
      CHECK(sgn(determinant(mp)) != 0);
      CHECK(char_poly(mp).coeffs() == oracle::faddeev_leverrier(mp));
    }
}

TEST_CASE("Lefschetz basis ordering is reproducible") {
  const auto b = lefschetz_basis(1, 0);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == BasisElement{0, 0});
  CHECK(b[1] == BasisElement{-1, 0b11});
}

TEST_CASE("determinant recursion") {
  {
    const auto rep = det_recursion_check(RMatrix{{Rational(2)}}, 1);
    CHECK(rep.part_a);
    CHECK(rep.part_b);
    CHECK(rep.final_det == UPoly::linear(3).pow(2));
    // (2 + l)(4 + l) + 1 by hand
    CHECK(rep.final_det == UPoly::linear(2) * UPoly::linear(4) + UPoly::constant(1));
  }
  {
    const auto rep = det_recursion_check(RMatrix{{Rational(0)}}, 2);
    CHECK(rep.part_a);
    CHECK(rep.part_b);
    CHECK(rep.mirrored);
    CHECK(rep.final_det == UPoly::linear(2).pow(4));
  }
  Rng rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    const int size = rng.uniform(1, 2);
    RMatrix m1(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m1(i, j) = rng.rational();
    const auto rep = det_recursion_check(m1, 3);
    CHECK(rep.part_a);
    CHECK(rep.part_b);
    CHECK(rep.mirrored);
  }
}
