#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdr/poisson.hpp"
#include "qdr/symplectic.hpp"

namespace qdr {

// Truncated d_h complex of a flat torus. d and delta preserve every Fourier
// mode, so the complex splits into one finite block per mode; each block is
// the exterior algebra over k[h] or k[h, 1/h] graded by total degree
// |I| + 2p. The formal factor tau (= 2 pi) multiplies d and delta alike, so
// it is set to 1 in the matrices; ranks are unaffected.
struct TruncatedComplex {
  PoissonModel model;
  CoeffMode mode = CoeffMode::laurent;
  int N = 0;
  int m_lo = 0, m_hi = 0;  // total degrees with matrices on both sides
  std::vector<std::vector<int>> modes;
  /// Basis of the total-degree-m piece of one block (shared by all modes).
  std::vector<BasisElement> basis(int m) const;
  /// dh[m - m_lo + 1][mode]: the matrix of d_h from degree m to m + 1, for
  /// m in [m_lo - 1, m_hi].
  std::vector<std::vector<CMatrix>> dh;
  /// d and delta on form degree j (no h), per mode: d_form[j][mode]: j -> j+1,
  /// delta_form[j][mode]: j -> j-1.
  std::vector<std::vector<CMatrix>> d_form, delta_form;

  int dim() const { return model.dim; }
};

/// Builds and verifies closure (std::domain_error if an image leaves the
/// truncation). Rejects non-torus models with std::invalid_argument.
TruncatedComplex build_complex(const PoissonModel& model, CoeffMode mode, int m_lo, int m_hi);
TruncatedComplex build_complex(const PoissonModel& model, CoeffMode mode);

struct DimensionReport {
  std::string label;
  std::vector<int> degrees;
  std::vector<int> space, kernel, image_in, cohomology;
  std::vector<std::optional<int>> expected;
  bool ranks_agree = true;  // row and column elimination gave equal ranks
  bool matches_expected() const;
  std::string table() const;
};

DimensionReport dr_cohomology_dims(const TruncatedComplex& c);
/// PH_j = ker(delta on j-forms) / im(delta on (j+1)-forms), j = 0..dim.
DimensionReport poisson_homology_dims(const TruncatedComplex& c);
DimensionReport quantum_cohomology_dims(const TruncatedComplex& c);
/// sum_p b_{m-2p} over the admissible p of the mode (p >= 0 in polynomial mode).
DimensionReport e1_dims(const TruncatedComplex& c);

struct DegeneracyReport {
  bool degenerate = false;
  DimensionReport quantum, e1;
};
DegeneracyReport degeneracy_check(const TruncatedComplex& c);

/// dim H^[m] = dim H^[m+2] for all m in range (Laurent complexes).
bool h_shift_invariant(const DimensionReport& quantum);

/// int_h alpha = sum_k int alpha_{2n-2k} ^ omega^k / k!, h-linear. The top
/// form dx^1..dx^2n integrates to 1. The result keeps only h and tau.
Fn quantum_integral(const FieldForm& a, const PoissonModel& torus_model);

struct StokesReport {
  Fn int_d, int_h_delta, int_dh;
  bool ok() const { return int_d.is_zero() && int_h_delta.is_zero() && int_dh.is_zero(); }
};
StokesReport stokes_check(const FieldForm& a, const PoissonModel& torus_model);

struct ContractionReport {
  bool proportional_i = false;
  Rational multiple_i;                 // iota_w(omega^{k+1}/(k+1)!) = multiple * omega^k/k!
  bool proportional_ii = false;
  std::vector<Rational> multiples_ii;  // per beta degree p = 0..2n-2k
};
/// Part (ii): w^{ij} (e_i -| beta) ^ (e_j -| omega^{k+1}/(k+1)!) against beta ^ omega^k/k!,
/// over all basis blades beta of each degree p.
ContractionReport contraction_identity_check(int n, int k);

}  // namespace qdr
