#include <doctest.h>

#include "qdr/complex_bigrade.hpp"
#include "qdr/poisson.hpp"
#include "qdr/random.hpp"

using namespace qdr;

namespace {

HolomorphicFrame frame(int n) { return holomorphic_frame(standard_omega(n), standard_complex_structure(n)); }

CxForm f(int dim, std::vector<int> slots, const Gaussian& c = 1) {
  return CxForm::blade(dim, std::move(slots), CxLaurent(c));
}

}  // namespace

TEST_CASE("holomorphic frame constants") {
  const auto fr = frame(1);
  const Gaussian i = Gaussian::i();
  // omega(f_1, f_1bar) = sqrt(-1)/2 and the bivector entry is -2/sqrt(-1)
  CHECK(fr.omega_f(0, 1) == i / Gaussian(2));
  CHECK(fr.omega_f(1, 0) == -(i / Gaussian(2)));
  CHECK(fr.w_f(0, 1) == Gaussian(-2) / i);
  CHECK(fr.omega_f(0, 0) == Gaussian(0));
  // f_a + f_abar = e_a: the dual covectors satisfy e^1 = (f^1 + f^1bar)/2
  // exactly when the vectors do.
  CHECK(fr.from_f(0, 0) + fr.from_f(0, 1) == Gaussian(1));
  CHECK(fr.from_f(0, 0) == fr.from_f(0, 1));
}

TEST_CASE("frame construction rejects incompatible data") {
  RMatrix bad_j{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};  // J^2 = +1
  CHECK_THROWS_AS(holomorphic_frame(standard_omega(1), bad_j), std::domain_error);
}

TEST_CASE("complexification and bidegrees") {
  const auto fr = frame(1);
  const QForm e1 = e_form(2, {1});
  const CxForm c1 = complexify(e1, fr);
  const auto parts = bidegree_components(c1);
  REQUIRE(parts.size() == 2);
  CxForm sum(2);
  for (const auto& [bd, part] : parts) {
    CHECK(pure_bidegree(part) == bd);
    sum += part;
  }
  CHECK(sum == c1);
  CHECK(decomplexify(c1, fr) == e1);

  const CxForm om = complexify(omega_form(standard_omega(1)), fr);
  CHECK(pure_bidegree(om) == Bidegree{1, 1});
  CHECK(bidegree_of(bit_of(frame_slot(1, false)), 1) == Bidegree{2, 1});
  CHECK(conjugate(conjugate(om)) == om);
}

TEST_CASE("holomorphic generators anticommute under the quantum product") {
  const auto fr = frame(2);
  const CxForm f1 = f(4, {frame_slot(1, false)});
  CHECK(quantum_wedge_cx(f1, f1, fr).is_zero());
  const CxForm f2 = f(4, {frame_slot(2, false)});
  CHECK(quantum_wedge_cx(f1, f2, fr) == -quantum_wedge_cx(f2, f1, fr));
}

TEST_CASE("the complex product matches the real one") {
  Rng rng(21);
  const auto fr = frame(2);
  const RMatrix w = bivector_of(standard_omega(2));
  for (int trial = 0; trial < 20; ++trial) {
    QForm a(4), b(4);
    for (int t = 0; t < 3; ++t) {
      a.add(static_cast<Mask>(rng.uniform(0, 15)), Laurent(rng.nonzero_rational()));
      b.add(static_cast<Mask>(rng.uniform(0, 15)), Laurent(rng.nonzero_rational()));
    }
    CHECK(quantum_wedge_cx(complexify(a, fr), complexify(b, fr), fr) == complexify(quantum_wedge(a, b, w), fr));
  }
}

TEST_CASE("hermitian pairing on frame monomials") {
  for (int n = 1; n <= 2; ++n) {
    const auto fr = frame(n);
    const auto mons = frame_monomials(n);
    for (std::size_t a = 0; a < mons.size(); ++a)
      for (std::size_t b = 0; b < mons.size(); ++b) {
        const Gaussian v = hermitian_pairing(mons[a], mons[b], fr);
        if (a != b) {
          CHECK(is_zero(v));
          continue;
        }
        // Diagonal entries come out as (-1)^q 2^{p+q}: positive only on
        // monomials with an even number of barred factors.
        const auto bd = *pure_bidegree(mons[a]);
        const Rational mag(1 << (bd.p + bd.q));
        CHECK(v == Gaussian(bd.q % 2 ? -mag : mag));
      }
  }
}

TEST_CASE("adjointness of the quantum product for the pairing") {
  const auto fr = frame(1);
  const auto mons = frame_monomials(1);
  const CxForm unit = CxForm::constant(2, CxLaurent(Gaussian(1)));
  int printed_failures = 0;
  for (const auto& a : mons)
    for (const auto& c : mons) {
      const auto rep = adjoint_check(a, unit, c, fr);
      CHECK(rep.printed);
      CHECK(rep.conjugated);
      CHECK(rep.lhs == hermitian_pairing_ext(a, c, fr));
    }
  for (int n = 1; n <= 2; ++n) {
    const auto frn = frame(n);
    const auto ms = frame_monomials(n);
    for (const auto& a : ms)
      for (const auto& b : ms)
        for (const auto& c : ms) {
          const auto rep = adjoint_check(a, b, c, frn);
          printed_failures += !rep.printed;
          const auto bd = *pure_bidegree(b);
          if (bd.p == bd.q) CHECK(rep.conjugated);
        }
  }
  // Moving b across the pairing without conjugating it is not an identity.
  CHECK(printed_failures > 0);
}

TEST_CASE("pairing prefactor") {
  CHECK(pairing_factor(0, 0) == Gaussian(1));
  // i^{1} (-1)^{1 + 0} = -i
  CHECK(pairing_factor(1, 0) == -Gaussian::i());
  // i^0 (-1)^{1 + 1} = 1
  CHECK(pairing_factor(1, 1) == Gaussian(1));
}

TEST_CASE("quantum Dolbeault operators") {
  Rng rng(8);
  for (int n = 1; n <= 2; ++n) {
    const auto fr = frame(n);
    const PoissonField w = PoissonField::constant(bivector_of(standard_omega(n)));
    // 0-forms: both Koszul pieces vanish
    const FieldForm fn = to_frame(FieldForm::constant(2 * n, random_poly(rng, 2 * n, 2)), fr);
    const auto [d01, d10] = dolbeault_deltas(fn, fr);
    CHECK(d01.is_zero());
    CHECK(d10.is_zero());
    for (int t = 0; t < 10; ++t) {
      const FieldForm x = random_poly_form(rng, 2 * n, rng.uniform(0, 2 * n), 3, 3);
      const FieldForm xf = to_frame(x, fr);
      const auto [del, delbar] = quantum_dolbeault_split(xf, fr);
      CHECK(del + delbar == to_frame(quantum_d(x, w), fr));
      CHECK(quantum_dolbeault_split(del, fr).first.is_zero());
      CHECK(quantum_dolbeault_split(delbar, fr).second.is_zero());
      CHECK((quantum_dolbeault_split(del, fr).second + quantum_dolbeault_split(delbar, fr).first).is_zero());
      CHECK(from_frame(xf, fr) == x);
    }
  }
}
