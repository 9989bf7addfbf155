#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdr/complex_bigrade.hpp"
#include "qdr/field_form.hpp"

namespace qdr {

/// A bivector field w^{ij}(x); antisymmetric by construction.
class PoissonField {
 public:
  explicit PoissonField(int dim);
  static PoissonField constant(const RMatrix& w);

  int dim() const { return w_.rows(); }
  const Fn& operator()(int i, int j) const { return w_(i - 1, j - 1); }  // 1-based
  /// Sets w^{ij} = f and w^{ji} = -f.
  void set(int i, int j, const Fn& f);
  const Matrix<Fn>& matrix() const { return w_; }
  bool is_constant() const;
  /// The rational matrix of a constant field; throws otherwise.
  RMatrix constant_value() const;

 private:
  Matrix<Fn> w_;
};

FieldForm contract_field(const PoissonField& w, const FieldForm& a);
/// delta = iota_w d - d iota_w.
FieldForm koszul_delta(const FieldForm& a, const PoissonField& w);
/// d_h = d - h delta.
FieldForm quantum_d(const FieldForm& a, const PoissonField& w);
/// Pointwise quantum product with coupling h w(x).
FieldForm quantum_wedge_field(const FieldForm& a, const FieldForm& b, const PoissonField& w);

struct JacobiResult {
  bool poisson = true;
  int k = 0, l = 0, i = 0;  // first failing triple, 1-based
  Fn value;                 // the nonzero cyclic sum there
};
/// Cyclic sum w^{kj} d_j w^{li} + w^{lj} d_j w^{ik} + w^{ij} d_j w^{kl}.
Fn jacobi_sum(const PoissonField& w, int k, int l, int i);
JacobiResult jacobi_check(const PoissonField& w);

struct DeltaComponentReport {
  bool consistent = false;
  std::optional<Rational> c;  // empty when every sample gives zero on both sides
  int components_checked = 0;
};
/// Components of -w^{pq} d_q alpha_{p i_2 ... i_k}, indexed by sorted blades.
FieldForm delta_components_formula(const FieldForm& a, const RMatrix& w);
/// Finds a single constant c with delta(alpha) = c * formula(alpha) on all samples.
DeltaComponentReport delta_component_check(const std::vector<FieldForm>& samples, const RMatrix& w);

// Flat Kahler model: everything below lives in the holomorphic frame of the
// given frame (slot 2a-1 = f^a, slot 2a = f^{a-bar}); coefficients are
// functions of the real coordinates.
FieldForm to_frame(const FieldForm& a, const HolomorphicFrame& fr);
FieldForm from_frame(const FieldForm& a, const HolomorphicFrame& fr);
/// Derivative along f_x (x a frame slot).
Fn frame_derivative(const Fn& f, int slot, const HolomorphicFrame& fr);
/// (p, q) form bidegree of a frame form if pure.
std::optional<Bidegree> form_bidegree(const FieldForm& framed);

struct DolbeaultOps {
  FieldForm del, delbar;                // d = del + delbar
  FieldForm delta_0m1, delta_m10;       // delta^{0,-1}, delta^{-1,0}
};
FieldForm dolbeault_del(const FieldForm& framed, const HolomorphicFrame& fr);
FieldForm dolbeault_delbar(const FieldForm& framed, const HolomorphicFrame& fr);
/// delta^{0,-1} = iota_w del - del iota_w and delta^{-1,0} = iota_w delbar - delbar iota_w.
std::pair<FieldForm, FieldForm> dolbeault_deltas(const FieldForm& framed, const HolomorphicFrame& fr);
/// (del_h, delbar_h) with del_h = del - h delta^{0,-1}, delbar_h = delbar - h delta^{-1,0}.
std::pair<FieldForm, FieldForm> quantum_dolbeault_split(const FieldForm& framed, const HolomorphicFrame& fr);

// ---------------------------------------------------------------------------

struct PoissonModel {
  std::string name;
  int dim = 0;
  PoissonField w{0};
  std::optional<RMatrix> omega;  // constant symplectic models
  int modes = -1;                // Fourier truncation N for tori, -1 otherwise
};

PoissonModel standard_symplectic(int n);
/// T^{2n} with the standard constant form and Fourier modes of sup-norm <= N.
PoissonModel torus(int n, int N);
PoissonModel lie_poisson_so3();
/// w^{12} = x3 on R^3.
PoissonModel heisenberg();
/// w^{12} = 1, w^{13} = x1 on R^3; fails the Jacobi identity.
PoissonModel non_poisson_example();
/// Looks up a fixture by name ("standard_symplectic", "torus", "lie_poisson_so3", ...).
PoissonModel fixture(const std::string& name, int n = 1, int N = 1);

/// Random form with coefficients suited to the model: polynomials, or
/// trigonometric polynomials with modes inside the truncation for tori.
FieldForm random_model_form(Rng& rng, const PoissonModel& m, int degree);

}  // namespace qdr
