#include <doctest.h>

#include <algorithm>

#include "qdr/cohomology.hpp"
#include "qdr/random.hpp"

using namespace qdr;

namespace {

std::vector<int> betti(const TruncatedComplex& c) { return dr_cohomology_dims(c).cohomology; }

FieldForm dx(int dim, std::vector<int> idx, const Fn& f = Fn(1)) { return dx_form(dim, std::move(idx), f); }

}  // namespace

TEST_CASE("de Rham cohomology of torus truncations") {
  CHECK(betti(build_complex(torus(1, 1), CoeffMode::laurent)) == std::vector<int>{1, 2, 1});
  CHECK(betti(build_complex(torus(1, 2), CoeffMode::laurent)) == std::vector<int>{1, 2, 1});
  CHECK(betti(build_complex(torus(1, 0), CoeffMode::laurent)) == std::vector<int>{1, 2, 1});
  CHECK(betti(build_complex(torus(2, 1), CoeffMode::laurent)) == std::vector<int>{1, 4, 6, 4, 1});
}

TEST_CASE("Poisson homology is de Rham cohomology reversed") {
  for (const auto& m : {torus(1, 1), torus(2, 1)}) {
    const auto c = build_complex(m, CoeffMode::laurent);
    const auto ph = poisson_homology_dims(c);
    auto b = betti(c);
    std::reverse(b.begin(), b.end());
    CHECK(ph.cohomology == b);
    CHECK(ph.matches_expected());
    CHECK(ph.ranks_agree);
  }
}

TEST_CASE("quantum cohomology: degeneration and h-periodicity") {
  {
    const auto c = build_complex(torus(1, 2), CoeffMode::laurent);
    const auto deg = degeneracy_check(c);
    CHECK(deg.degenerate);
    CHECK(deg.quantum.matches_expected());
    for (int v : deg.quantum.cohomology) CHECK(v == 2);  // b0 + b2 or b1
    CHECK(h_shift_invariant(deg.quantum));
  }
  {
    const auto c = build_complex(torus(2, 1), CoeffMode::laurent);
    const auto deg = degeneracy_check(c);
    CHECK(deg.degenerate);
    for (int v : deg.quantum.cohomology) CHECK(v == 8);  // 1 + 6 + 1 or 4 + 4
    CHECK(h_shift_invariant(deg.quantum));
  }
  {
    const auto c = build_complex(torus(1, 2), CoeffMode::polynomial);
    CHECK(degeneracy_check(c).degenerate);
  }
}

TEST_CASE("exactness bookkeeping in every degree") {
  const auto c = build_complex(torus(1, 1), CoeffMode::laurent);
  const auto q = quantum_cohomology_dims(c);
  CHECK(q.ranks_agree);
  for (std::size_t i = 0; i < q.degrees.size(); ++i) {
    CHECK(q.cohomology[i] == q.kernel[i] - q.image_in[i]);
    // the image arriving in degree m is the rank of d_h leaving degree m - 1
    if (i > 0 && q.degrees[i] == q.degrees[i - 1] + 1) CHECK(q.image_in[i] == q.space[i - 1] - q.kernel[i - 1]);
  }
}

TEST_CASE("complexes exist only for tori") {
  CHECK_THROWS_AS(build_complex(standard_symplectic(1), CoeffMode::laurent), std::invalid_argument);
}

TEST_CASE("quantum integral") {
  const auto t2 = torus(1, 1);
  CHECK(quantum_integral(FieldForm::constant(2, Fn(1)), t2) == Fn(1));
  CHECK(quantum_integral(dx(2, {1, 2}), t2) == Fn(1));
  CHECK(quantum_integral(dx(2, {1}, fn_mode({0, 0})) + dx(2, {2}, Fn(3)), t2).is_zero());
  // h-linear, and a nonzero mode integrates to zero
  CHECK(quantum_integral(FieldForm::constant(2, fn_h(2) + fn_mode({1, 0})), t2) == fn_h(2));
}

TEST_CASE("quantum Stokes") {
  const auto t2 = torus(1, 1);
  const auto rep = stokes_check(dx(2, {2}, fn_mode({1, 0})), t2);
  CHECK(rep.int_d.is_zero());
  CHECK(rep.int_h_delta.is_zero());
  CHECK(rep.int_dh.is_zero());
  CHECK(stokes_check(dx(2, {1}, Fn(2)), t2).ok());

  Rng rng(7);
  for (const auto& m : {torus(1, 2), torus(2, 1)})
    for (int t = 0; t < 40; ++t) CHECK(stokes_check(random_model_form(rng, m, rng.uniform(0, m.dim)), m).ok());
}

TEST_CASE("contraction identities of omega powers") {
  // iota_w omega = -n, so (i) at n = 1, k = 0 gives -1
  const auto a = contraction_identity_check(1, 0);
  CHECK(a.proportional_i);
  CHECK(a.multiple_i == -1);
  // iota_w omega^2 = -2 omega, so (i) at n = 2, k = 1 gives -(n - k) = -1
  const auto b = contraction_identity_check(2, 1);
  CHECK(b.proportional_i);
  CHECK(b.multiple_i == -1);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < n; ++k) {
      const auto r = contraction_identity_check(n, k);
      CHECK(r.proportional_i);
      CHECK(r.proportional_ii);
      CHECK(r.multiple_i == -(n - k));
      for (std::size_t p = 0; p < r.multiples_ii.size(); ++p) {
        const long pp = static_cast<long>(p);
        CHECK(r.multiples_ii[p] == (pp % 2 ? pp : -pp));
      }
    }
}
