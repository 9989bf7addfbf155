#include "qdr/chern_weil.hpp"

#include <sstream>
#include <stdexcept>

namespace qdr {

FieldForm QuantumCalculus::wedge(const FieldForm& a, const FieldForm& b) const {
  if (product_sign > 0) return quantum_wedge_field(a, b, w);
  PoissonField neg(w.dim());
  for (int i = 1; i <= w.dim(); ++i)
    for (int j = i + 1; j <= w.dim(); ++j) neg.set(i, j, -w(i, j));
  return quantum_wedge_field(a, b, neg);
}

namespace {

int degree_or_throw(const FieldForm& a) {
  auto k = a.form_degree();
  if (!k) throw std::invalid_argument("expected a homogeneous form");
  return *k;
}

// Degree of a matrix whose nonzero entries share one form degree (0 if all vanish).
int matrix_degree(const MatrixForm& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return degree_or_throw(m(i, j));
  return 0;
}

Fn sign_fn(int k) { return Fn(k % 2 ? -1 : 1); }

}  // namespace

bool quantum_leibniz_holds(const QuantumCalculus& qc, const FieldForm& a, const FieldForm& b) {
  const FieldForm lhs = qc.d(qc.wedge(a, b));
  const FieldForm rhs = qc.wedge(qc.d(a), b) + sign_fn(a.is_zero() ? 0 : degree_or_throw(a)) * qc.wedge(a, qc.d(b));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

MatrixForm::MatrixForm(int rows, int cols, int dim)
    : rows_(rows), cols_(cols), dim_(dim), e_(static_cast<std::size_t>(rows * cols), FieldForm(dim)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("MatrixForm: empty shape");
}

MatrixForm MatrixForm::identity(int r, int dim) {
  MatrixForm m(r, r, dim);
  for (int i = 0; i < r; ++i) m(i, i) = FieldForm::constant(dim, Fn(1));
  return m;
}

MatrixForm MatrixForm::scalar(const FieldForm& a) {
  MatrixForm m(1, 1, a.dim());
  m(0, 0) = a;
  return m;
}

MatrixForm& MatrixForm::operator+=(const MatrixForm& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || dim_ != o.dim_) throw std::invalid_argument("MatrixForm: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatrixForm& MatrixForm::operator-=(const MatrixForm& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || dim_ != o.dim_) throw std::invalid_argument("MatrixForm: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

bool operator==(const MatrixForm& a, const MatrixForm& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool MatrixForm::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool MatrixForm::entries_of_degree(int k) const {
  for (const auto& x : e_) {
    if (x.is_zero()) continue;
    auto d = x.form_degree();
    if (!d || *d != k) return false;
  }
  return true;
}

MatrixForm mat_wedge(const MatrixForm& a, const MatrixForm& b, const QuantumCalculus& qc) {
  if (a.cols() != b.rows() || a.dim() != b.dim()) throw std::invalid_argument("mat_wedge: shape mismatch");
  MatrixForm out(a.rows(), b.cols(), a.dim());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) out(i, j) += qc.wedge(a(i, k), b(k, j));
  return out;
}

MatrixForm mat_d(const MatrixForm& a, const QuantumCalculus& qc) {
  return a.map([&](const FieldForm& x) { return qc.d(x); });
}

MatrixForm graded_bracket(const MatrixForm& a, const MatrixForm& b, const QuantumCalculus& qc) {
  return mat_wedge(a, b, qc) - mat_wedge(b, a, qc);
}

MatrixForm mat_wedge_right(const MatrixForm& a, const FieldForm& b, const QuantumCalculus& qc) {
  return a.map([&](const FieldForm& x) { return qc.wedge(x, b); });
}

std::string to_string(const MatrixForm& a) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

MatrixForm covariant_d(const MatrixForm& phi, const MatrixForm& theta, const QuantumCalculus& qc) {
  if (theta.rows() != theta.cols() || theta.rows() != phi.rows())
    throw std::invalid_argument("covariant_d: rank mismatch");
  if (theta.dim() != phi.dim() || theta.dim() != qc.dim()) throw std::invalid_argument("covariant_d: dimension mismatch");
  if (!theta.entries_of_degree(1)) throw std::invalid_argument("covariant_d: connection entries must be 1-forms");
  return mat_wedge(theta, phi, qc) + mat_d(phi, qc);
}

MatrixForm quantum_curvature(const MatrixForm& theta, const QuantumCalculus& qc) {
  if (!theta.entries_of_degree(1)) throw std::invalid_argument("quantum_curvature: connection entries must be 1-forms");
  return mat_d(theta, qc) + mat_wedge(theta, theta, qc);
}

// ---------------------------------------------------------------------------

GaugeTransform::GaugeTransform(MatrixForm g, MatrixForm g_inv) : g_(std::move(g)), g_inv_(std::move(g_inv)) {
  if (!g_.entries_of_degree(0) || !g_inv_.entries_of_degree(0))
    throw std::invalid_argument("gauge transform entries must be functions");
  // Products of 0-forms are ordinary products, whatever the calculus.
  const QuantumCalculus plain{PoissonField(g_.dim()), 1};
  const MatrixForm id = MatrixForm::identity(g_.rows(), g_.dim());
  if (!(mat_wedge(g_, g_inv_, plain) == id) || !(mat_wedge(g_inv_, g_, plain) == id))
    throw std::invalid_argument("gauge transform: G * G^{-1} != Id");
}

GaugeTransform GaugeTransform::unipotent(const MatrixForm& g) {
  const int r = g.rows();
  const FieldForm one = FieldForm::constant(g.dim(), Fn(1));
  for (int i = 0; i < r; ++i) {
    if (!(g(i, i) == one)) throw std::invalid_argument("unipotent: diagonal must be 1");
    for (int j = 0; j < i; ++j)
      if (!g(i, j).is_zero()) throw std::invalid_argument("unipotent: must be upper triangular");
  }
  // Solve G X = Id column by column from the bottom row up.
  MatrixForm inv(r, r, g.dim());
  for (int j = 0; j < r; ++j)
    for (int i = r - 1; i >= 0; --i) {
      FieldForm v = i == j ? one : FieldForm(g.dim());
      for (int k = i + 1; k < r; ++k) v -= wedge(g(i, k), inv(k, j));
      inv(i, j) = v;
    }
  return GaugeTransform(g, inv);
}

MatrixForm conjugate_by(const MatrixForm& a, const GaugeTransform& G) {
  const QuantumCalculus plain{PoissonField(a.dim()), 1};
  return mat_wedge(mat_wedge(G.inverse(), a, plain), G.g(), plain);
}

MatrixForm gauge_transform(const MatrixForm& theta, const GaugeTransform& G) {
  const QuantumCalculus plain{PoissonField(theta.dim()), 1};
  return conjugate_by(theta, G) + mat_wedge(G.inverse(), G.g().map([](const FieldForm& x) { return exterior_d(x); }), plain);
}

CurvatureGaugeReport curvature_gauge_check(const MatrixForm& theta, const GaugeTransform& G,
                                           const QuantumCalculus& qc) {
  return {quantum_curvature(gauge_transform(theta, G), qc), conjugate_by(quantum_curvature(theta, qc), G)};
}

BianchiReport bianchi_check(const MatrixForm& theta, const QuantumCalculus& qc) {
  const MatrixForm curv = quantum_curvature(theta, qc);
  return {mat_d(curv, qc), graded_bracket(curv, theta, qc)};
}

bool curvature_square_check(const MatrixForm& theta, const MatrixForm& phi, const QuantumCalculus& qc) {
  return covariant_d(covariant_d(phi, theta, qc), theta, qc) == mat_wedge(quantum_curvature(theta, qc), phi, qc);
}

bool covariant_leibniz_check(const MatrixForm& theta, const MatrixForm& phi, const FieldForm& a,
                             const QuantumCalculus& qc) {
  const int k = matrix_degree(phi);
  if (!phi.entries_of_degree(k)) throw std::invalid_argument("covariant_leibniz_check: phi must be homogeneous");
  const MatrixForm lhs = covariant_d(mat_wedge_right(phi, a, qc), theta, qc);
  MatrixForm rhs = mat_wedge_right(covariant_d(phi, theta, qc), a, qc);
  MatrixForm second = mat_wedge_right(phi, qc.d(a), qc);
  rhs += k % 2 ? second.map([](const FieldForm& x) { return -x; }) : second;
  return lhs == rhs;
}

bool frame_independence_check(const MatrixForm& theta, const MatrixForm& phi, const GaugeTransform& G,
                              const QuantumCalculus& qc) {
  const QuantumCalculus plain{PoissonField(theta.dim()), 1};
  const MatrixForm phi_new = mat_wedge(G.inverse(), phi, plain);
  const MatrixForm direct = mat_wedge(G.inverse(), covariant_d(phi, theta, qc), plain);
  return covariant_d(phi_new, gauge_transform(theta, G), qc) == direct;
}

// ---------------------------------------------------------------------------

std::string to_string(CharPoly p) {
  switch (p) {
    case CharPoly::trace:
      return "trace";
    case CharPoly::trace_square:
      return "trace_square";
    default:
      return "second_elementary";
  }
}

FieldForm char_form(const MatrixForm& curvature, CharPoly p, const QuantumCalculus& qc) {
  if (curvature.rows() != curvature.cols()) throw std::invalid_argument("char_form: square matrix required");
  auto trace = [](const MatrixForm& m) {
    FieldForm t(m.dim());
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
  };
  switch (p) {
    case CharPoly::trace:
      return trace(curvature);
    case CharPoly::trace_square:
      return trace(mat_wedge(curvature, curvature, qc));
    default: {
      const FieldForm t = trace(curvature);
      return Fn(Gaussian(Rational(1, 2))) * (qc.wedge(t, t) - trace(mat_wedge(curvature, curvature, qc)));
    }
  }
}

FieldForm truncate_total_degree(const FieldForm& a, int max_degree) {
  FieldForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    Fn kept;
    for (const auto& [mono, z] : c.terms())
      if (degree_of(m) + 2 * mono.h <= max_degree) kept.add(mono, z);
    if (!kept.is_zero()) out.add(m, kept);
  }
  return out;
}

FieldForm ChernCharacter::total() const {
  FieldForm out(terms.empty() ? 0 : terms.front().dim());
  for (const auto& t : terms) out += t;
  return out;
}

ChernCharacter chern_character(const MatrixForm& theta, const QuantumCalculus& qc, int N) {
  if (theta.rows() != 1 || theta.cols() != 1)
    throw std::invalid_argument("chern_character: only line bundles (rank 1) are supported");
  if (N < 0) throw std::invalid_argument("chern_character: negative truncation");
  const FieldForm omega_h = qc.d(theta(0, 0));
  for (const auto& [m, c] : omega_h.terms())
    for (const auto& [mono, z] : c.terms())
      if (degree_of(m) + 2 * mono.h < 1) throw std::invalid_argument("chern_character: curvature has a degree-0 part");
  ChernCharacter ch;
  FieldForm power = FieldForm::constant(theta.dim(), Fn(1));
  ch.terms.push_back(power);
  for (int k = 1; k <= N; ++k) {
    power = truncate_total_degree(qc.wedge(omega_h, power), N);
    if (power.is_zero()) break;
    ch.terms.push_back(Fn(Gaussian(Rational(1) / factorial(k))) * power);
  }
  return ch;
}

// ---------------------------------------------------------------------------

MatrixForm random_connection(Rng& rng, int rank, int dim, int max_poly_degree) {
  MatrixForm theta(rank, rank, dim);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) theta(i, j) = random_poly_form(rng, dim, 1, max_poly_degree, 2);
  return theta;
}

GaugeTransform random_unipotent(Rng& rng, int rank, int dim, int max_poly_degree) {
  MatrixForm g = MatrixForm::identity(rank, dim);
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) g(i, j) = FieldForm::constant(dim, random_poly(rng, dim, max_poly_degree, 2));
  return GaugeTransform::unipotent(g);
}

}  // namespace qdr
