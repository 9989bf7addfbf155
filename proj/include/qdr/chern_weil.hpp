#pragma once

#include <string>
#include <vector>

#include "qdr/poisson.hpp"

namespace qdr {

// The pair (d_h, ^_h) everything below is built from. The pinned calculus is
// d_h = d - h delta with the product coupled to +h w. The mirrored variant
// couples the product to -h w instead; it exists only to diagnose the sign
// mismatch between the two (see quantum_leibniz_holds).
struct QuantumCalculus {
  PoissonField w{0};
  int product_sign = 1;

  static QuantumCalculus pinned(const PoissonField& w) { return {w, 1}; }
  static QuantumCalculus mirrored(const PoissonField& w) { return {w, -1}; }

  int dim() const { return w.dim(); }
  FieldForm d(const FieldForm& a) const { return quantum_d(a, w); }
  FieldForm wedge(const FieldForm& a, const FieldForm& b) const;
};

/// d_h(a ^_h b) == d_h a ^_h b + (-1)^{deg a} a ^_h d_h b for a homogeneous.
bool quantum_leibniz_holds(const QuantumCalculus& qc, const FieldForm& a, const FieldForm& b);

/// An r x c array of forms; r x r for connection and curvature forms, r x 1
/// for the coefficients of a bundle-valued form in a frame.
class MatrixForm {
 public:
  MatrixForm(int rows, int cols, int dim);
  static MatrixForm zero(int r, int dim) { return MatrixForm(r, r, dim); }
  static MatrixForm identity(int r, int dim);
  static MatrixForm scalar(const FieldForm& a);  // 1 x 1

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return dim_; }
  FieldForm& operator()(int i, int j) { return e_[i * cols_ + j]; }  // 0-based
  const FieldForm& operator()(int i, int j) const { return e_[i * cols_ + j]; }

  MatrixForm& operator+=(const MatrixForm& o);
  MatrixForm& operator-=(const MatrixForm& o);
  friend MatrixForm operator+(MatrixForm a, const MatrixForm& b) { return a += b; }
  friend MatrixForm operator-(MatrixForm a, const MatrixForm& b) { return a -= b; }
  friend bool operator==(const MatrixForm& a, const MatrixForm& b);

  bool is_zero() const;
  /// Every entry a homogeneous form of this degree (zero entries allowed).
  bool entries_of_degree(int k) const;
  template <class F>
  MatrixForm map(F&& f) const {
    MatrixForm out(rows_, cols_, dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = f(e_[i]);
    return out;
  }

 private:
  int rows_, cols_, dim_;
  std::vector<FieldForm> e_;
};

/// Matrix product with ^_h between entries.
MatrixForm mat_wedge(const MatrixForm& a, const MatrixForm& b, const QuantumCalculus& qc);
/// Entrywise d_h.
MatrixForm mat_d(const MatrixForm& a, const QuantumCalculus& qc);
/// [a ^_h b]_{ij} = sum_k (a_ik ^_h b_kj - b_ik ^_h a_kj).
MatrixForm graded_bracket(const MatrixForm& a, const MatrixForm& b, const QuantumCalculus& qc);
/// Right multiplication of every entry by a scalar form.
MatrixForm mat_wedge_right(const MatrixForm& a, const FieldForm& b, const QuantumCalculus& qc);
std::string to_string(const MatrixForm& a);

/// theta ^_h phi + d_h phi, phi the frame coefficients (r x c).
MatrixForm covariant_d(const MatrixForm& phi, const MatrixForm& theta, const QuantumCalculus& qc);
/// d_h theta + theta ^_h theta.
MatrixForm quantum_curvature(const MatrixForm& theta, const QuantumCalculus& qc);

/// A matrix of functions together with an inverse, checked at construction.
class GaugeTransform {
 public:
  GaugeTransform(MatrixForm g, MatrixForm g_inv);
  /// Upper unitriangular G; the inverse is found by back substitution.
  static GaugeTransform unipotent(const MatrixForm& g);
  const MatrixForm& g() const { return g_; }
  const MatrixForm& inverse() const { return g_inv_; }

 private:
  MatrixForm g_, g_inv_;
};

/// G^{-1} theta G + G^{-1} dG.
MatrixForm gauge_transform(const MatrixForm& theta, const GaugeTransform& G);
/// G^{-1} a G.
MatrixForm conjugate_by(const MatrixForm& a, const GaugeTransform& G);

struct CurvatureGaugeReport {
  MatrixForm curvature_transformed, conjugated_curvature;
  bool ok() const { return curvature_transformed == conjugated_curvature; }
};
CurvatureGaugeReport curvature_gauge_check(const MatrixForm& theta, const GaugeTransform& G,
                                           const QuantumCalculus& qc);

struct BianchiReport {
  MatrixForm lhs, rhs;  // d_h Theta and [Theta ^_h theta]
  bool ok() const { return lhs == rhs; }
};
BianchiReport bianchi_check(const MatrixForm& theta, const QuantumCalculus& qc);

/// (d_h^nabla)^2 phi against Theta_h ^_h phi (Theta acting on the frame
/// coefficients from the left).
bool curvature_square_check(const MatrixForm& theta, const MatrixForm& phi, const QuantumCalculus& qc);
/// d^nabla(phi ^_h a) against (d^nabla phi) ^_h a + (-1)^{deg phi} phi ^_h d_h a.
bool covariant_leibniz_check(const MatrixForm& theta, const MatrixForm& phi, const FieldForm& a,
                             const QuantumCalculus& qc);
/// Covariant derivatives in the frames s and sG agree: G^{-1} d^theta(phi) = d^{theta'}(G^{-1} phi).
bool frame_independence_check(const MatrixForm& theta, const MatrixForm& phi, const GaugeTransform& G,
                              const QuantumCalculus& qc);

enum class CharPoly { trace, trace_square, second_elementary };
std::string to_string(CharPoly p);
/// tr Theta, tr(Theta ^_h Theta), or (tr(Theta)^2_h - tr(Theta^2_h)) / 2.
FieldForm char_form(const MatrixForm& curvature, CharPoly p, const QuantumCalculus& qc);

struct ChernCharacter {
  /// terms[k] = (Omega_h)^k_h / k!; the k-th term carries the factor u^k with
  /// u = sqrt(-1) / (2 pi), kept symbolic.
  std::vector<FieldForm> terms;
  std::string unit = "sqrt(-1)/(2*pi)";
  /// Sum of the terms with u set to 1.
  FieldForm total() const;
};
/// Rank-1 only: exp_h of Omega_h = d_h theta, truncated at total degree N
/// (form degree + 2 * h-power). std::invalid_argument for rank > 1.
ChernCharacter chern_character(const MatrixForm& theta, const QuantumCalculus& qc, int N);

/// Drops monomials with form degree + 2 * (h-power) > max_degree.
FieldForm truncate_total_degree(const FieldForm& a, int max_degree);

/// Random r x r connection of polynomial 1-forms.
MatrixForm random_connection(Rng& rng, int rank, int dim, int max_poly_degree = 2);
/// Random unipotent upper-triangular gauge transform with polynomial entries.
GaugeTransform random_unipotent(Rng& rng, int rank, int dim, int max_poly_degree = 2);

}  // namespace qdr
