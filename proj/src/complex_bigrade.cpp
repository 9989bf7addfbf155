#include "qdr/complex_bigrade.hpp"

#include <map>
#include <stdexcept>

namespace qdr {

CxLaurent cx_lift(const Laurent& c) {
  CxLaurent out;
  for (const auto& [hp, r] : c.terms()) out.add(hp, Gaussian(r));
  return out;
}

std::string to_string(const CxLaurent& c) {
  std::vector<std::string> terms;
  for (const auto& [hp, z] : c.terms())
    terms.push_back(format_term(z, hp.e == 0 ? "" : (hp.e == 1 ? "h" : "h^" + std::to_string(hp.e))));
  return join_terms(terms);
}

namespace {

std::string frame_blade_name(Mask m) {
  std::string out;
  for (int i : indices_of(m)) {
    if (!out.empty()) out += "^";
    out += (i % 2 ? "f" : "fb") + std::to_string((i + 1) / 2);
  }
  return out;
}

bool h_free(const CxForm& a) {
  for (const auto& [m, c] : a.terms())
    for (const auto& [hp, z] : c.terms())
      if (hp.e != 0) return false;
  return true;
}

Gaussian scalar_part(const CxForm& a) { return a.coeff(0).coeff(HPow{0}); }

Matrix<CxLaurent> lift(const CMatrix& w, int hexp) {
  Matrix<CxLaurent> W(w.rows(), w.cols());
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) W(i, j) = CxLaurent::monomial(HPow{hexp}, w(i, j));
  return W;
}

CMatrix to_complex(const RMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Gaussian(m(i, j));
  return out;
}

}  // namespace

std::string to_string(const CxForm& a) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : display_terms(a)) {
    const std::string blade = frame_blade_name(m);
    for (const auto& [hp, z] : c.terms()) {
      std::string mono = hp.e == 0 ? "" : (hp.e == 1 ? "h" : "h^" + std::to_string(hp.e));
      if (!blade.empty()) mono += mono.empty() ? blade : "*" + blade;
      terms.push_back(format_term(z, mono));
    }
  }
  return join_terms(terms);
}

RMatrix standard_complex_structure(int n) {
  RMatrix J(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    J(2 * a + 1, 2 * a) = 1;
    J(2 * a, 2 * a + 1) = -1;
  }
  return J;
}

bool preserves_bivector(const RMatrix& J, const RMatrix& w) { return J * w * J.transpose() == w; }

HolomorphicFrame holomorphic_frame(const RMatrix& omega, const RMatrix& J, const RMatrix& basis) {
  const int d = omega.rows();
  if (d % 2 || !omega.square() || J.rows() != d || !J.square() || basis.rows() != d || !basis.square())
    throw std::invalid_argument("holomorphic_frame: dimension mismatch");
  require_bivector(omega);
  const RMatrix id = RMatrix::identity(d);
  if (!(J * J == -id)) throw std::domain_error("J^2 != -1");
  if (!(J.transpose() * omega * J == omega)) throw std::domain_error("omega is not J-invariant");
  const RMatrix g = omega * J;
  if (!(g == g.transpose())) throw std::domain_error("g = omega(., J.) is not symmetric");
  for (int k = 1; k <= d; ++k) {
    RMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (sgn(determinant(minor)) <= 0) throw std::domain_error("g is not positive definite");
  }
  if (!(basis.transpose() * g * basis == id)) throw std::domain_error("basis is not g-orthonormal");
  const RMatrix jb = J * basis;
  for (int a = 0; a < d / 2; ++a)
    for (int i = 0; i < d; ++i)
      if (jb(i, 2 * a) != basis(i, 2 * a + 1)) throw std::domain_error("basis is not of the form {e_a, J e_a}");

  HolomorphicFrame fr;
  fr.n = d / 2;
  fr.omega = omega;
  fr.J = J;
  const Gaussian half(Rational(1, 2)), i = Gaussian::i();
  CMatrix F(d, d);
  for (int a = 0; a < fr.n; ++a)
    for (int r = 0; r < d; ++r) {
      Gaussian x = basis(r, 2 * a), y = basis(r, 2 * a + 1);
      F(r, 2 * a) = half * (x - i * y);
      F(r, 2 * a + 1) = half * (x + i * y);
    }
  fr.from_f = F;
  fr.to_f = inverse(F);
  const CMatrix om = to_complex(omega), w = to_complex(bivector_of(omega));
  fr.omega_f = F.transpose() * om * F;
  fr.w_f = fr.to_f * w * fr.to_f.transpose();
  return fr;
}

HolomorphicFrame holomorphic_frame(const RMatrix& omega, const RMatrix& J) {
  return holomorphic_frame(omega, J, RMatrix::identity(omega.rows()));
}

CxForm complexify(const QForm& a, const HolomorphicFrame& fr) {
  const int d = 2 * fr.n;
  if (a.dim() != d) throw std::invalid_argument("complexify: dimension mismatch");
  std::vector<CxForm> e(d + 1, CxForm(d));
  for (int i = 1; i <= d; ++i)
    for (int x = 1; x <= d; ++x)
      if (!is_zero(fr.from_f(i - 1, x - 1))) e[i].add(bit_of(x), CxLaurent(fr.from_f(i - 1, x - 1)));
  CxForm out(d);
  for (const auto& [m, c] : a.terms()) {
    CxForm term = CxForm::constant(d, cx_lift(c));
    for (int i : indices_of(m)) term = wedge(term, e[i]);
    out += term;
  }
  return out;
}

QForm decomplexify(const CxForm& a, const HolomorphicFrame& fr) {
  const int d = 2 * fr.n;
  std::vector<CxForm> f(d + 1, CxForm(d));
  for (int x = 1; x <= d; ++x)
    for (int i = 1; i <= d; ++i)
      if (!is_zero(fr.to_f(x - 1, i - 1))) f[x].add(bit_of(i), CxLaurent(fr.to_f(x - 1, i - 1)));
  CxForm real(d);
  for (const auto& [m, c] : a.terms()) {
    CxForm term = CxForm::constant(d, c);
    for (int x : indices_of(m)) term = wedge(term, f[x]);
    real += term;
  }
  QForm out(d);
  for (const auto& [m, c] : real.terms())
    for (const auto& [hp, z] : c.terms()) {
      if (!z.is_real()) throw std::domain_error("decomplexify: form is not real");
      out.add(m, hpow(hp.e, z.re));
    }
  return out;
}

CxForm conjugate(const CxForm& a) {
  CxForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = indices_of(m);
    for (int& i : idx) i += (i % 2) ? 1 : -1;
    CxLaurent cc;
    for (const auto& [hp, z] : c.terms()) cc.add(hp, z.conj());
    out += CxForm::blade(a.dim(), idx, cc);
  }
  return out;
}

Bidegree bidegree_of(Mask m, int hexp) {
  Bidegree b{hexp, hexp};
  for (int i : indices_of(m)) ++(i % 2 ? b.p : b.q);
  return b;
}

std::vector<std::pair<Bidegree, CxForm>> bidegree_components(const CxForm& a) {
  std::map<Bidegree, CxForm> parts;
  for (const auto& [m, c] : a.terms())
    for (const auto& [hp, z] : c.terms())
      parts.try_emplace(bidegree_of(m, hp.e), CxForm(a.dim())).first->second.add(m, CxLaurent::monomial(hp, z));
  return {parts.begin(), parts.end()};
}

std::optional<Bidegree> pure_bidegree(const CxForm& a) {
  auto parts = bidegree_components(a);
  if (parts.size() != 1) return std::nullopt;
  return parts.front().first;
}

CxForm quantum_wedge_cx(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr) {
  if (!preserves_bivector(fr.J, bivector_of(fr.omega))) throw std::domain_error("J does not preserve the bivector");
  return deformed_product(a, b, lift(fr.w_f, 1));
}

CxForm wedge_w(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr) {
  return deformed_product(a, b, lift(fr.w_f, 0));
}

Gaussian pairing_factor(int p, int q) {
  // i^{p-q}: reduce the exponent mod 4.
  const int e = (((p - q) % 4) + 4) % 4;
  Gaussian ipow = e == 0 ? Gaussian(1) : e == 1 ? Gaussian::i() : e == 2 ? Gaussian(-1) : -Gaussian::i();
  const int s = p + (p + q) * (p + q - 1) / 2;
  return s % 2 ? -ipow : ipow;
}

Gaussian hermitian_pairing(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr) {
  if (!h_free(a) || !h_free(b)) throw std::invalid_argument("hermitian_pairing: h-free forms required");
  if (a.is_zero()) return Gaussian(0);
  auto bd = pure_bidegree(a);
  if (!bd) throw std::invalid_argument("hermitian_pairing: first argument must have pure bidegree");
  return pairing_factor(bd->p, bd->q) * scalar_part(wedge_w(a, conjugate(b), fr));
}

Gaussian hermitian_pairing_ext(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr) {
  Gaussian out(0);
  for (const auto& [bd, part] : bidegree_components(a)) out += hermitian_pairing(part, b, fr);
  return out;
}

bool pairing_signs_agree(const CxForm& a, const CxForm& b, const HolomorphicFrame& fr) {
  auto bd = pure_bidegree(a);
  if (!bd) return true;
  for (const auto& [bb, part] : bidegree_components(b)) {
    if (is_zero(scalar_part(wedge_w(a, conjugate(part), fr)))) continue;
    if (!(pairing_factor(bd->p, bd->q) == pairing_factor(bb.p, bb.q))) return false;
  }
  return true;
}

AdjointReport adjoint_check(const CxForm& a, const CxForm& b, const CxForm& c, const HolomorphicFrame& fr) {
  AdjointReport r;
  r.lhs = hermitian_pairing_ext(wedge_w(a, b, fr), c, fr);
  r.rhs_printed = hermitian_pairing_ext(a, wedge_w(b, c, fr), fr);
  r.rhs_conjugated = hermitian_pairing_ext(a, wedge_w(conjugate(b), c, fr), fr);
  r.printed = r.lhs == r.rhs_printed;
  r.conjugated = r.lhs == r.rhs_conjugated;
  return r;
}

std::vector<CxForm> frame_monomials(int n) {
  std::vector<CxForm> out;
  for (Mask m : blades_by_degree(2 * n)) out.push_back(CxForm::from_mask(2 * n, m, CxLaurent(Gaussian(1))));
  return out;
}

}  // namespace qdr
