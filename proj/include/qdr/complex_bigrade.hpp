#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdr/symplectic.hpp"

namespace qdr {

// Gaussian-rational Laurent polynomials in h.
using CxLaurent = SparsePoly<HPow, Gaussian>;
// Forms in a holomorphic frame. Slot 2a-1 holds f^a and slot 2a holds f^{a-bar}.
using CxForm = Exterior<CxLaurent>;

CxLaurent cx_lift(const Laurent& c);
std::string to_string(const CxLaurent& c);
std::string to_string(const CxForm& a);

struct HolomorphicFrame {
  int n = 0;
  /// f^x = sum_i to_f(x, i) e^i  (rows are the dual frame covectors).
  CMatrix to_f;
  /// e^i = sum_x from_f(i, x) f^x.
  CMatrix from_f;
  /// omega(f_x, f_y).
  CMatrix omega_f;
  /// The Poisson bivector in frame indices, W^{xy}.
  CMatrix w_f;
  /// Real data used to build the frame.
  RMatrix omega, J;
};

/// J e_{2a-1} = e_{2a}; compatible with the standard omega.
RMatrix standard_complex_structure(int n);

/// Builds f_a = (b_{2a-1} - i b_{2a}) / 2 and its conjugate from a basis
/// b_1..b_2n (columns of `basis`, in e-coordinates) of the form
/// {e_1, J e_1, ..., e_n, J e_n}. Throws std::domain_error unless J^2 = -1,
/// omega is J-invariant, g = omega(., J .) is positive definite and the basis
/// is g-orthonormal with b_{2a} = J b_{2a-1}.
HolomorphicFrame holomorphic_frame(const RMatrix& omega, const RMatrix& J, const RMatrix& basis);
HolomorphicFrame holomorphic_frame(const RMatrix& omega, const RMatrix& J);

/// Lambda^2 J (w) = w, i.e. J w J^T = w.
bool preserves_bivector(const RMatrix& J, const RMatrix& w);

/// The f^a / f^{a-bar} slot for a complex index; bar selects the conjugate.
inline int frame_slot(int a, bool bar) { return 2 * a - (bar ? 0 : 1); }

CxForm complexify(const QForm& a, const HolomorphicFrame& fr);
/// Back to the real frame; throws std::domain_error if any coefficient is not real.
QForm decomplexify(const CxForm& a, const HolomorphicFrame& fr);
/// Coefficient-wise conjugation together with f^a <-> f^{a-bar}.
CxForm conjugate(const CxForm& a);

struct Bidegree {
  int p = 0, q = 0;
  auto operator<=>(const Bidegree&) const = default;
};
/// Bidegree of a monomial h^e f^I: h has bidegree (1,1).
Bidegree bidegree_of(Mask m, int hexp);
/// Pure components, keyed by bidegree; they sum to the input.
std::vector<std::pair<Bidegree, CxForm>> bidegree_components(const CxForm& a);
/// The bidegree if a is pure, otherwise nothing (the zero form has none).
std::optional<Bidegree> pure_bidegree(const CxForm& a);

/// Quantum product in the holomorphic frame; throws std::domain_error if J
/// does not preserve the bivector.
CxForm quantum_wedge_cx(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr);
/// The same product with h set to 1.
CxForm wedge_w(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr);

/// i^{p-q} (-1)^{p + (p+q)(p+q-1)/2}.
Gaussian pairing_factor(int p, int q);
/// H(a, b) = pairing_factor(p, q) * (a ^_w conj(b))_0 with (p, q) the bidegree
/// of a. Inputs must be h-free; a must be pure (std::invalid_argument otherwise).
Gaussian hermitian_pairing(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr);
/// Sesquilinear extension over the pure components of a.
Gaussian hermitian_pairing_ext(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr);
/// Whether the two sign prefactors (from the bidegrees of a and of b) agree
/// whenever (a ^_w conj(b))_0 is nonzero.
bool pairing_signs_agree(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr);

struct AdjointReport {
  Gaussian lhs;                // H(a ^_w b, c)
  Gaussian rhs_printed;        // H(a, b ^_w c)
  Gaussian rhs_conjugated;     // H(a, conj(b) ^_w c)
  bool printed = false;
  bool conjugated = false;
};
AdjointReport adjoint_check(const CxForm& a, const CxForm& b, const CxForm& c, const HolomorphicFrame& fr);

/// All h-free frame monomials f^I (coefficient 1) of dimension 2n.
std::vector<CxForm> frame_monomials(int n);

}  // namespace qdr
