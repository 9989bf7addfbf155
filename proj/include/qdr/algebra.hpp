#pragma once

#include <string>
#include <vector>

#include "qdr/exterior.hpp"
#include "qdr/matrix.hpp"
#include "qdr/poly.hpp"

namespace qdr {

// Forms with coefficients in k[h, 1/h].
using QForm = Exterior<Laurent>;
// Forms with coefficients in k[h_1, ..., h_m].
using MForm = Exterior<MultiH>;
// w^{ij} as a square rational matrix. Antisymmetry is checked where the
// mathematics needs it; the product itself accepts any square array.
using Bivector = RMatrix;

bool is_antisymmetric(const RMatrix& w);
void require_bivector(const RMatrix& w);

QForm e_form(int dim, std::vector<int> idx, const Rational& c = 1);
QForm scalar_form(int dim, const Laurent& c);
/// h^power as a 0-form.
QForm h_form(int dim, int power = 1, const Rational& c = 1);

/// alpha ^_h beta with coupling h * w.
QForm quantum_wedge(const QForm& a, const QForm& b, const RMatrix& w);

/// alpha ^_{h_1..h_m} beta with coupling sum_j h_j w_j.
MForm quantum_wedge_multi(const MForm& a, const MForm& b, const std::vector<RMatrix>& ws);
/// Lifts a form with h-free rational coefficients.
MForm to_multi(const QForm& a);
/// h_j := c_j * h.
QForm specialize(const MForm& a, const std::vector<Rational>& c);

QForm quantum_power(const QForm& a, int k, const RMatrix& w);
/// sum_k a^k_h / k!, dropping monomials of total degree > max_degree. Every
/// monomial of a must have total degree >= 1, otherwise the truncation would
/// not terminate; std::invalid_argument is thrown in that case.
QForm quantum_exp(const QForm& a, const RMatrix& w, int max_degree);

/// Total degree with deg(h) = 2.
struct TotalDegree {
  enum class Kind { zero, homogeneous, mixed };
  Kind kind = Kind::zero;
  int value = 0;
  bool homogeneous() const { return kind == Kind::homogeneous; }
  std::string str() const;
};
TotalDegree total_degree(const QForm& a);
TotalDegree total_degree(const Laurent& c);

QForm truncate_total_degree(const QForm& a, int max_degree);
/// The h^e coefficient layer, as an h-free form.
QForm h_coefficient(const QForm& a, int e);
/// Multiply by h^shift.
QForm h_shift(const QForm& a, int shift);

/// "e1^e2 + (-1)*h": form degree descending, h-power ascending.
std::string to_string(const QForm& a, const std::string& prefix = "e");
std::string to_string(const MForm& a);

// Moyal-Weyl product of polynomial functions (variables x1..x_dim, no modes),
// u * v = sum_n h^n / n! w^{i1j1}..w^{injn} d_I u d_J v.
Fn moyal_product(const Fn& u, const Fn& v, const RMatrix& w);

}  // namespace qdr
