#include "qdr/symplectic.hpp"

#include <map>
#include <stdexcept>

namespace qdr {

void require_polynomial(const QForm& a) {
  for (const auto& [m, c] : a.terms())
    if (!is_polynomial(c)) throw std::domain_error("polynomial mode: negative power of h");
}

RMatrix standard_omega(int n) {
  if (n < 1 || 2 * n > kMaxDim) throw std::invalid_argument("standard_omega: n out of range");
  RMatrix om(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    om(2 * a, 2 * a + 1) = 1;
    om(2 * a + 1, 2 * a) = -1;
  }
  return om;
}

QForm omega_form(const RMatrix& omega) {
  const int d = omega.rows();
  QForm out(d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (sgn(omega(i - 1, j - 1)) != 0) out += e_form(d, {i, j}, omega(i - 1, j - 1));
  return out;
}

RMatrix bivector_of(const RMatrix& omega) {
  require_bivector(omega);
  if (omega.rows() % 2 != 0) throw std::domain_error("symplectic form needs even dimension");
  return inverse(omega);
}

std::vector<Rational> sharp(const RMatrix& omega, const std::vector<Rational>& phi) {
  RMatrix w = bivector_of(omega);
  std::vector<Rational> v(phi.size(), Rational(0));
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) v[i] += w(i, j) * phi[j];
  return v;
}

std::vector<Rational> flat(const RMatrix& omega, const std::vector<Rational>& v) {
  std::vector<Rational> phi(v.size(), Rational(0));
  for (int i = 0; i < omega.rows(); ++i)
    for (int j = 0; j < omega.cols(); ++j) phi[i] += omega(i, j) * v[j];
  return phi;
}

namespace {

Matrix<Laurent> lift(const RMatrix& w) {
  Matrix<Laurent> W(w.rows(), w.cols());
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) W(i, j) = Laurent(w(i, j));
  return W;
}

Laurent invert_h(const Laurent& c) {
  Laurent out;
  for (const auto& [m, r] : c.terms()) out.add(HPow{-m.e}, r);
  return out;
}

int half_dim(const RMatrix& omega) { return omega.rows() / 2; }

}  // namespace

QForm contract_bivector(const RMatrix& w, const QForm& a) { return contract_bivector(lift(w), a); }

QForm volume_form(const RMatrix& omega) {
  const int n = half_dim(omega);
  QForm om = omega_form(omega);
  QForm vol = scalar_form(omega.rows(), Laurent(1));
  for (int k = 0; k < n; ++k) vol = wedge(om, vol);
  return Laurent(Rational(1) / factorial(n)) * vol;
}

Rational blade_pairing(const RMatrix& w, Mask beta, Mask alpha) {
  auto bi = indices_of(beta), ai = indices_of(alpha);
  if (bi.size() != ai.size()) throw std::invalid_argument("blade_pairing: degree mismatch");
  const int k = static_cast<int>(bi.size());
  if (k == 0) return 1;
  RMatrix m(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m(a, b) = w(bi[a] - 1, ai[b] - 1);
  return determinant(m);
}

QForm symplectic_star(const QForm& a, const RMatrix& omega) {
  const int d = omega.rows();
  if (a.dim() != d) throw std::invalid_argument("symplectic_star: dimension mismatch");
  const RMatrix w = bivector_of(omega);
  const Mask full = (Mask{1} << d) - 1;
  const Rational vol = coeff(volume_form(omega).coeff(full), 0);
  QForm out(d);
  for (const auto& [J, c] : a.terms()) {
    const Laurent cstar = invert_h(c);
    // beta ^ *e^J = pairing(beta, J) v_w: only the complement of beta can
    // contribute, so each equation of the linear system has a single unknown.
    for (Mask beta : blades_of_degree(d, degree_of(J))) {
      Rational lam = blade_pairing(w, beta, J);
      if (sgn(lam) == 0) continue;
      Mask gamma = full ^ beta;
      out.add(gamma, Laurent(lam * vol * wedge_sign(beta, gamma)) * cstar);
    }
  }
  return out;
}

QForm apply_L(const QForm& a, const RMatrix& omega) { return wedge(omega_form(omega), a); }

QForm apply_K(const QForm& a) {
  QForm out(a.dim());
  for (int j = 1; j <= a.dim(); ++j) out += wedge(e_form(a.dim(), {j}), insert_first(j, a));
  return out;
}

QForm apply_Lstar(const QForm& a, const RMatrix& omega) { return contract_bivector(bivector_of(omega), a); }

QForm apply_A(const QForm& a, const RMatrix& omega) {
  if (a.is_zero()) return a;
  auto k = a.form_degree();
  if (!k) throw std::invalid_argument("apply_A: inhomogeneous input");
  return Laurent(Rational(half_dim(omega) - *k)) * a;
}

QForm apply_Lh(const QForm& a, const RMatrix& omega) {
  return quantum_wedge(omega_form(omega), a, bivector_of(omega));
}

QForm apply_Lhstar(const QForm& a, const RMatrix& omega, CoeffMode mode) {
  if (mode != CoeffMode::laurent) throw std::domain_error("apply_Lhstar: requires Laurent coefficients");
  return -symplectic_star(apply_Lh(symplectic_star(a, omega), omega), omega);
}

QForm apply_Ah(const QForm& a, const RMatrix& omega) {
  const int n = half_dim(omega);
  QForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    Laurent scaled;
    for (const auto& [hp, r] : c.terms()) scaled.add(hp, r * (n - degree_of(m) - 2 * hp.e));
    out.add(m, scaled);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const BasisElement& b) {
  std::string blade = blade_name(b.blade);
  std::string hp = b.hexp == 0 ? "" : (b.hexp == 1 ? "h" : "h^" + std::to_string(b.hexp));
  if (hp.empty()) return blade.empty() ? "1" : blade;
  return blade.empty() ? hp : hp + "*" + blade;
}

LinOp operator_matrix(const QOperator& op, int dim, const std::vector<BasisElement>& domain,
                      const std::vector<BasisElement>& codomain) {
  std::map<std::pair<int, Mask>, int> index;
  for (std::size_t i = 0; i < codomain.size(); ++i) index[{codomain[i].hexp, codomain[i].blade}] = static_cast<int>(i);
  LinOp out{domain, codomain, RMatrix(static_cast<int>(codomain.size()), static_cast<int>(domain.size()))};
  for (std::size_t col = 0; col < domain.size(); ++col) {
    QForm image = op(QForm::from_mask(dim, domain[col].blade, hpow(domain[col].hexp)));
    for (const auto& [m, c] : image.terms())
      for (const auto& [hp, r] : c.terms()) {
        auto it = index.find({hp.e, m});
        if (it == index.end())
          throw std::domain_error("operator image leaves the codomain basis at " + to_string(BasisElement{hp.e, m}));
        out.matrix(it->second, static_cast<int>(col)) = r;
      }
  }
  return out;
}

std::vector<BasisElement> blade_basis(int dim) {
  std::vector<BasisElement> out;
  for (Mask m : blades_by_degree(dim)) out.push_back({0, m});
  return out;
}

std::vector<BasisElement> graded_basis(int dim, int m) {
  std::vector<BasisElement> out;
  for (int d = 0; d <= dim; ++d) {
    if (((m - d) % 2 + 2) % 2 != 0) continue;
    int p = (m - d) / 2;
    for (Mask b : blades_of_degree(dim, d)) out.push_back({p, b});
  }
  return out;
}

std::vector<BasisElement> lefschetz_basis(int n, int parity) {
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  return graded_basis(2 * n, parity);
}

LinOp lefschetz_matrix(int n, int parity) {
  const RMatrix omega = standard_omega(n);
  auto basis = lefschetz_basis(n, parity);
  return operator_matrix([&](const QForm& a) { return h_shift(apply_Lh(a, omega), -1); }, 2 * n, basis, basis);
}

// ---------------------------------------------------------------------------

namespace {

// Fits targets[b] = sum_k x_k components[b][k] over all basis samples b.
ConstantsReport fit_constants(const std::vector<QForm>& targets, const std::vector<std::vector<QForm>>& components) {
  const int unknowns = components.empty() ? 0 : static_cast<int>(components[0].size());
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t b = 0; b < targets.size(); ++b) {
    std::map<std::pair<Mask, int>, bool> keys;
    auto collect = [&keys](const QForm& f) {
      for (const auto& [m, c] : f.terms())
        for (const auto& [hp, r] : c.terms()) keys[{m, hp.e}] = true;
    };
    collect(targets[b]);
    for (const auto& comp : components[b]) collect(comp);
    for (const auto& [key, unused] : keys) {
      std::vector<Rational> row;
      for (const auto& comp : components[b]) row.push_back(coeff(comp.coeff(key.first), key.second));
      rows.push_back(row);
      rhs.push_back(coeff(targets[b].coeff(key.first), key.second));
    }
  }
  RMatrix a(static_cast<int>(rows.size()), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) a(static_cast<int>(i), j) = rows[i][j];
  ConstantsReport rep;
  auto x = solve(a, rhs);
  rep.consistent = x.has_value();
  rep.unique = rank(a) == unknowns;
  if (x) rep.values = *x;
  rep.detail = std::to_string(rows.size()) + " coefficient equations";
  return rep;
}

}  // namespace

ConstantsReport decomposition_report(int n) {
  const RMatrix omega = standard_omega(n);
  const int d = 2 * n;
  std::vector<QForm> targets;
  std::vector<std::vector<QForm>> comps;
  for (Mask m : blades_by_degree(d)) {
    QForm a = QForm::from_mask(d, m, Laurent(1));
    targets.push_back(apply_Lh(a, omega));
    comps.push_back({apply_L(a, omega), h_shift(apply_K(a), 1), h_shift(apply_Lstar(a, omega), 2)});
  }
  return fit_constants(targets, comps);
}

ConstantsReport relation_report(int n) {
  const RMatrix omega = standard_omega(n);
  const int d = 2 * n;
  std::vector<QForm> targets;
  std::vector<std::vector<QForm>> comps;
  for (Mask m : blades_by_degree(d)) {
    QForm a = QForm::from_mask(d, m, Laurent(1));
    targets.push_back(apply_Lhstar(a, omega));
    comps.push_back({h_shift(apply_Lh(a, omega), -2), h_shift(a, -1)});
  }
  return fit_constants(targets, comps);
}

LefschetzRelations lefschetz_relations(int n) {
  const RMatrix omega = standard_omega(n);
  const int d = 2 * n;
  auto basis = blade_basis(d);
  auto mat = [&](const QOperator& op) { return operator_matrix(op, d, basis, basis).matrix; };
  RMatrix L = mat([&](const QForm& a) { return apply_L(a, omega); });
  RMatrix K = mat([](const QForm& a) { return apply_K(a); });
  RMatrix I = mat([&](const QForm& a) { return apply_Lstar(a, omega); });
  RMatrix S = mat([&](const QForm& a) { return symplectic_star(a, omega); });
  RMatrix Id = RMatrix::identity(static_cast<int>(basis.size()));
  LefschetzRelations rel;
  rel.L_K = commutator(L, K) == Rational(-2) * L;
  rel.Lstar_K = commutator(I, K) == Rational(2) * I;
  RMatrix C = commutator(L, I), D = K - Rational(n) * Id;
  if (C == D) {
    rel.sl2_sign_found = true;
    rel.sl2_sign = 1;
  } else if (C == -D) {
    rel.sl2_sign_found = true;
    rel.sl2_sign = -1;
  }
  rel.star_involution = S * S == Id;
  rel.Kstar = -(S * K * S) == K - Rational(2 * n) * Id;
  return rel;
}

QuantumRelations quantum_relations(int n, int m_lo, int m_hi) {
  const RMatrix omega = standard_omega(n);
  const int d = 2 * n;
  QOperator Lh = [&](const QForm& a) { return apply_Lh(a, omega); };
  QOperator Ls = [&](const QForm& a) { return apply_Lhstar(a, omega); };
  QOperator Ah = [&](const QForm& a) { return apply_Ah(a, omega); };
  QOperator H = [](const QForm& a) { return h_shift(a, 1); };
  auto M = [&](const QOperator& op, int from, int to) {
    return operator_matrix(op, d, graded_basis(d, from), graded_basis(d, to)).matrix;
  };
  QuantumRelations rel{true, true, true, 0, 0};
  bool plus = true, minus = true;
  for (int m = m_lo; m <= m_hi; ++m) {
    RMatrix lh_up = M(Lh, m, m + 2), lh_in = M(Lh, m - 2, m);
    RMatrix ls_dn = M(Ls, m, m - 2), ls_in = M(Ls, m + 2, m);
    RMatrix ah = M(Ah, m, m), ah_up = M(Ah, m + 2, m + 2), ah_dn = M(Ah, m - 2, m - 2);
    rel.Lh_Lhstar = rel.Lh_Lhstar && (ls_in * lh_up == lh_in * ls_dn);
    rel.Lh_Ah = rel.Lh_Ah && (lh_up * ah - ah_up * lh_up == Rational(2) * lh_up);
    rel.Lhstar_Ah = rel.Lhstar_Ah && (ls_dn * ah - ah_dn * ls_dn == Rational(-2) * ls_dn);
    RMatrix hm = M(H, m, m + 2);
    RMatrix c = ah_up * hm - hm * ah;
    plus = plus && c == Rational(2) * hm;
    minus = minus && c == Rational(-2) * hm;
    ++rel.pieces_checked;
  }
  rel.Ah_h_sign = plus ? 1 : (minus ? -1 : 0);
  return rel;
}

// ---------------------------------------------------------------------------

namespace {

QForm by_form_degree(const QForm& a, const std::function<Rational(int)>& f) {
  QForm out(a.dim());
  for (const auto& [m, c] : a.terms()) out.add(m, Laurent(f(degree_of(m))) * c);
  return out;
}

// D(h^j w) = j h^j w.
QForm h_degree(const QForm& a) {
  QForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    Laurent scaled;
    for (const auto& [hp, r] : c.terms()) scaled.add(hp, r * hp.e);
    out.add(m, scaled);
  }
  return out;
}

}  // namespace

FamilyOps family_ops(const OperatorTriple& t, int sign, const Rational& p, const Rational& q, const Rational& r) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("family_ops: sign must be +1 or -1");
  FamilyOps ops;
  ops.Lh = [t, sign, p](const QForm& a) {
    return t.X(a) + hpow(1, sign) * t.H(a) + hpow(2) * t.Y(a) + hpow(1, p) * a;
  };
  ops.Lhstar = [t, sign, q](const QForm& a) {
    return t.Y(a) + hpow(-1, sign) * t.H(a) + hpow(-2) * t.X(a) + hpow(-1, q) * a;
  };
  ops.Ah = [t, r](const QForm& a) { return t.H(a) + Laurent(r) * a - Laurent(2) * h_degree(a); };
  return ops;
}

OperatorTriple lefschetz_triple(const RMatrix& omega) {
  const int n = half_dim(omega);
  OperatorTriple t;
  t.X = [omega](const QForm& a) { return apply_L(a, omega); };
  t.Y = [omega](const QForm& a) { return apply_Lstar(a, omega); };
  t.H = [n](const QForm& a) { return by_form_degree(a, [n](int k) { return Rational(n - k); }); };
  return t;
}

namespace {

template <class Check>
bool on_window(int dim, int jlo, int jhi, Check&& check) {
  for (int j = jlo; j <= jhi; ++j)
    for (Mask m : blades_by_degree(dim))
      if (!check(QForm::from_mask(dim, m, hpow(j)))) return false;
  return true;
}

QForm apply_comm(const QOperator& a, const QOperator& b, const QForm& x) { return a(b(x)) - b(a(x)); }

}  // namespace

FamilyRelations family_relations(const FamilyOps& ops, int dim) {
  FamilyRelations rel;
  rel.X_Y = on_window(dim, -2, 2, [&](const QForm& x) { return apply_comm(ops.Lh, ops.Lhstar, x).is_zero(); });
  rel.X_H = on_window(dim, -2, 2, [&](const QForm& x) {
    return apply_comm(ops.Lh, ops.Ah, x) == Laurent(2) * ops.Lh(x);
  });
  rel.Y_H = on_window(dim, -2, 2, [&](const QForm& x) {
    return apply_comm(ops.Lhstar, ops.Ah, x) == Laurent(-2) * ops.Lhstar(x);
  });
  for (int e : {1, -1}) {
    QOperator mult = [e](const QForm& a) { return h_shift(a, e); };
    int found = 0;
    for (int s : {1, -1})
      if (on_window(dim, -2, 2, [&](const QForm& x) {
            return apply_comm(ops.Ah, mult, x) == Laurent(2 * s) * mult(x);
          }))
        found = s;
    (e == 1 ? rel.H_Mplus_sign : rel.H_Mminus_sign) = found;
  }
  return rel;
}

bool triple_is_sl2(const OperatorTriple& t, int dim) {
  return on_window(dim, 0, 0, [&](const QForm& x) {
    return apply_comm(t.X, t.Y, x) == t.H(x) && apply_comm(t.X, t.H, x) == Laurent(2) * t.X(x) &&
           apply_comm(t.Y, t.H, x) == Laurent(-2) * t.Y(x);
  });
}

// ---------------------------------------------------------------------------

UPoly shifted_det(const RMatrix& m) { return char_poly(-m); }

RMatrix recursion_step(const RMatrix& m, bool mirrored) {
  const int s = m.rows();
  RMatrix out(2 * s, 2 * s);
  const Rational off = mirrored ? 1 : -1;
  const Rational diag = mirrored ? -2 : 2;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      out(i, j) = m(i, j);
      out(s + i, s + j) = m(i, j);
    }
    out(i, s + i) = off;
    out(s + i, i) = -off;
    out(s + i, s + i) += diag;
  }
  return out;
}

DetRecursionReport det_recursion_check(const RMatrix& m1, int depth) {
  if (!m1.square()) throw std::invalid_argument("det_recursion_check: square matrix required");
  if (depth < 0 || depth > 4 || (m1.rows() << depth) > 64)
    throw std::invalid_argument("det_recursion_check: depth/size bound exceeded");
  DetRecursionReport rep;
  rep.part_a = rep.part_b = rep.mirrored = true;
  const UPoly p1 = shifted_det(m1);
  RMatrix m = m1, mm = m1;
  UPoly prev = p1;
  for (int j = 1; j <= depth; ++j) {
    m = recursion_step(m);
    mm = recursion_step(mm, true);
    UPoly cur = shifted_det(m);
    rep.part_a = rep.part_a && cur == prev.shift(1).pow(2);
    rep.part_b = rep.part_b && cur == p1.shift(j).pow(1 << j);
    rep.mirrored = rep.mirrored && shifted_det(mm) == p1.shift(-j).pow(1 << j);
    prev = cur;
  }
  rep.final_det = prev;
  rep.detail = "det(M_" + std::to_string(depth + 1) + " + lambda I) = " + to_string(prev, "lambda");
  return rep;
}

}  // namespace qdr
