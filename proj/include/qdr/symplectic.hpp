#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qdr/algebra.hpp"

namespace qdr {

enum class CoeffMode { polynomial, laurent };

/// Throws std::domain_error if any coefficient has a negative power of h.
void require_polynomial(const QForm& a);

// ---------------------------------------------------------------------------
// Symplectic linear algebra on V = k^{2n}.

/// omega_{2a-1,2a} = 1 = -omega_{2a,2a-1}.
RMatrix standard_omega(int n);
/// sum_{i<j} omega_{ij} e^i ^ e^j.
QForm omega_form(const RMatrix& omega);
/// The inverse matrix: w * omega = identity. Throws on singular omega.
RMatrix bivector_of(const RMatrix& omega);
/// alpha^sharp = w * alpha, characterized by omega(v, alpha^sharp) = alpha(v).
std::vector<Rational> sharp(const RMatrix& omega, const std::vector<Rational>& phi);
std::vector<Rational> flat(const RMatrix& omega, const std::vector<Rational>& v);

/// iota_w alpha = sum_{i<j} w^{ij} alpha(e_i, e_j, ...).
QForm contract_bivector(const RMatrix& w, const QForm& a);

/// The normalized volume form omega^n / n!.
QForm volume_form(const RMatrix& omega);
/// Pairing det[w^{i_a j_b}] of two blades of equal degree.
Rational blade_pairing(const RMatrix& w, Mask beta, Mask alpha);
/// Symplectic star: beta ^ *alpha = pairing(beta, alpha) * v_w, extended to
/// Laurent coefficients by *h = 1/h.
QForm symplectic_star(const QForm& a, const RMatrix& omega);

// The operator family. n is half the dimension of omega.
QForm apply_L(const QForm& a, const RMatrix& omega);
/// e^j ^ (e_j -| alpha); equals deg * alpha on homogeneous forms.
QForm apply_K(const QForm& a);
QForm apply_Lstar(const QForm& a, const RMatrix& omega);
/// (n - k) alpha on forms of degree k. Throws on inhomogeneous input.
QForm apply_A(const QForm& a, const RMatrix& omega);
/// omega ^_h alpha.
QForm apply_Lh(const QForm& a, const RMatrix& omega);
/// -* L_h *; needs Laurent coefficients.
QForm apply_Lhstar(const QForm& a, const RMatrix& omega, CoeffMode mode = CoeffMode::laurent);
/// (n - k) on each monomial of total degree k.
QForm apply_Ah(const QForm& a, const RMatrix& omega);

// ---------------------------------------------------------------------------
// Matrices of operators.

using QOperator = std::function<QForm(const QForm&)>;

/// A basis element h^hexp * e^blade.
struct BasisElement {
  int hexp = 0;
  Mask blade = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};
std::string to_string(const BasisElement& b);

/// The matrix of an operator between two enumerated bases; columns are images.
struct LinOp {
  std::vector<BasisElement> domain;
  std::vector<BasisElement> codomain;
  RMatrix matrix;
};

/// Matrix of op from `domain` into `codomain`; throws std::domain_error if an
/// image leaves the span of the codomain basis.
LinOp operator_matrix(const QOperator& op, int dim, const std::vector<BasisElement>& domain,
                      const std::vector<BasisElement>& codomain);
/// All blades with h^0, degree-ascending order.
std::vector<BasisElement> blade_basis(int dim);
/// Total-degree-m piece of the Laurent algebra: h^p e^I with |I| + 2p = m,
/// ordered by p descending (so blade degree ascending) then lexicographically.
std::vector<BasisElement> graded_basis(int dim, int m);
/// Lefschetz basis h^{-k} e^{i_1..i_{2k+parity}}: k ascending, blades lexicographic.
std::vector<BasisElement> lefschetz_basis(int n, int parity);

/// Matrix of M = h^{-1} L_h on the total-degree-`parity` piece.
LinOp lefschetz_matrix(int n, int parity);

// ---------------------------------------------------------------------------
// Reports: constants solved from the operators rather than assumed.

struct ConstantsReport {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> values;
  std::string detail;
};

/// Solves L_h = c0 L + c1 h K + c2 h^2 iota_w on the blade basis of dimension 2n.
ConstantsReport decomposition_report(int n);
/// Solves L_h* = a h^-2 L_h + b h^-1 Id on the blade basis of dimension 2n.
ConstantsReport relation_report(int n);

struct LefschetzRelations {
  bool L_K = false;        // [L, K] = -2L
  bool Lstar_K = false;    // [iota_w, K] = 2 iota_w
  bool sl2_sign_found = false;
  int sl2_sign = 0;        // s with [L, iota_w] = s (K - n)
  bool star_involution = false;  // ** = Id on blades
  bool Kstar = false;            // -*K* = K - 2n
};
LefschetzRelations lefschetz_relations(int n);

struct QuantumRelations {
  bool Lh_Lhstar = false;   // [L_h, L_h*] = 0
  bool Lh_Ah = false;       // [L_h, A_h] = 2 L_h
  bool Lhstar_Ah = false;   // [L_h*, A_h] = -2 L_h*
  int Ah_h_sign = 0;        // s with [A_h, h] = s * 2h
  int pieces_checked = 0;
};
/// Checks the sl2-type commutation identities as matrices on the total-degree pieces
/// m in [m_lo, m_hi].
QuantumRelations quantum_relations(int n, int m_lo, int m_hi);

// ---------------------------------------------------------------------------
// The operator family L_h(+-, p), L_h*(+-, q), A_h(r) built from a triple
// (X, Y, H) acting on W = Lambda(V*) and extended h-linearly:
//   L_h(s, p)  = X + s h H + h^2 Y + p h
//   L_h*(s, q) = Y + s h^-1 H + h^-2 X + q h^-1
//   A_h(r)(h^j w) = h^j (H + r - 2j) w

struct OperatorTriple {
  QOperator X, Y, H;
};
struct FamilyOps {
  QOperator Lh, Lhstar, Ah;
};
FamilyOps family_ops(const OperatorTriple& t, int sign, const Rational& p, const Rational& q,
                     const Rational& r);
OperatorTriple lefschetz_triple(const RMatrix& omega);

struct FamilyRelations {
  bool X_Y = false;        // [X', Y'] = 0
  bool X_H = false;        // [X', H'] = 2 X'
  bool Y_H = false;        // [Y', H'] = -2 Y'
  int H_Mplus_sign = 0;    // s with [H', h] = s * 2h
  int H_Mminus_sign = 0;   // s with [H', 1/h] = s * 2/h
};
/// Evaluates the g and g' relations on h^j e^I for all blades and j in [-2, 2].
FamilyRelations family_relations(const FamilyOps& ops, int dim);
/// Checks the sl2 relations [X,Y] = H, [X,H] = 2X, [Y,H] = -2Y on blades.
bool triple_is_sl2(const OperatorTriple& t, int dim);

// ---------------------------------------------------------------------------
// Characteristic polynomials and the determinant recursion.

/// det(lambda I + M) as a polynomial in lambda.
UPoly shifted_det(const RMatrix& m);

struct DetRecursionReport {
  bool part_a = false;      // det(M_{j+1} + lI) = det(M_j + (l+1)I)^2 for all j
  bool part_b = false;      // det(M_{k+1} + lI) = det(M_1 + (l+k)I)^{2^k}
  bool mirrored = false;    // [[M, I], [-I, M - 2I]] gives det(M_1 + (l-k)I)^{2^k}
  UPoly final_det;          // det(M_{k+1} + lambda I)
  std::string detail;
};
DetRecursionReport det_recursion_check(const RMatrix& m1, int depth);
RMatrix recursion_step(const RMatrix& m, bool mirrored = false);

}  // namespace qdr
