#include "qdr/poisson.hpp"

#include <stdexcept>

namespace qdr {

PoissonField::PoissonField(int dim) : w_(dim, dim) {}

PoissonField PoissonField::constant(const RMatrix& w) {
  require_bivector(w);
  PoissonField f(w.rows());
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) f.w_(i, j) = Fn(Gaussian(w(i, j)));
  return f;
}

void PoissonField::set(int i, int j, const Fn& f) {
  if (i < 1 || j < 1 || i > dim() || j > dim() || i == j) throw std::invalid_argument("PoissonField::set: bad index");
  w_(i - 1, j - 1) = f;
  w_(j - 1, i - 1) = -f;
}

bool PoissonField::is_constant() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!has_only_constants(w_(i, j))) return false;
  return true;
}

RMatrix PoissonField::constant_value() const {
  RMatrix out(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      const Fn& f = w_(i, j);
      if (!has_only_constants(f)) throw std::domain_error("bivector field is not constant");
      Laurent c = to_laurent(f);
      if (!(c.is_zero() || (min_exponent(c) == 0 && max_exponent(c) == 0)))
        throw std::domain_error("bivector field depends on h");
      out(i, j) = coeff(c, 0);
    }
  return out;
}

FieldForm contract_field(const PoissonField& w, const FieldForm& a) {
  if (w.dim() != a.dim()) throw std::invalid_argument("contract_field: dimension mismatch");
  return contract_bivector(w.matrix(), a);
}

FieldForm koszul_delta(const FieldForm& a, const PoissonField& w) {
  return contract_field(w, exterior_d(a)) - exterior_d(contract_field(w, a));
}

FieldForm quantum_d(const FieldForm& a, const PoissonField& w) {
  return exterior_d(a) - times_h(koszul_delta(a, w));
}

FieldForm quantum_wedge_field(const FieldForm& a, const FieldForm& b, const PoissonField& w) {
  Matrix<Fn> W = w.matrix();
  for (int i = 0; i < W.rows(); ++i)
    for (int j = 0; j < W.cols(); ++j) W(i, j) = h_shift(W(i, j), 1);
  return deformed_product(a, b, W);
}

Fn jacobi_sum(const PoissonField& w, int k, int l, int i) {
  Fn s;
  for (int j = 1; j <= w.dim(); ++j)
    s += w(k, j) * partial(w(l, i), j) + w(l, j) * partial(w(i, k), j) + w(i, j) * partial(w(k, l), j);
  return s;
}

JacobiResult jacobi_check(const PoissonField& w) {
  JacobiResult r;
  for (int k = 1; k <= w.dim(); ++k)
    for (int l = 1; l <= w.dim(); ++l)
      for (int i = 1; i <= w.dim(); ++i) {
        Fn s = jacobi_sum(w, k, l, i);
        if (!s.is_zero()) return {false, k, l, i, s};
      }
  return r;
}

FieldForm delta_components_formula(const FieldForm& a, const RMatrix& w) {
  FieldForm out(a.dim());
  for (const auto& [m, f] : a.terms())
    for (int p : indices_of(m))
      for (int q = 1; q <= a.dim(); ++q) {
        if (sgn(w(p - 1, q - 1)) == 0) continue;
        // alpha_{p J} with J = I \ p sorted: move p to the front of I.
        Fn term = partial(f, q).scaled(Gaussian(-w(p - 1, q - 1) * first_slot_sign(m, p)));
        out.add(m ^ bit_of(p), term);
      }
  return out;
}

DeltaComponentReport delta_component_check(const std::vector<FieldForm>& samples, const RMatrix& w) {
  DeltaComponentReport rep;
  const PoissonField field = PoissonField::constant(w);
  std::vector<std::pair<FieldForm, FieldForm>> pairs;
  for (const auto& a : samples) pairs.emplace_back(koszul_delta(a, field), delta_components_formula(a, w));
  for (const auto& [lhs, rhs] : pairs) {
    for (const auto& [m, f] : rhs.terms()) {
      const auto& [mono, z] = *f.terms().begin();
      Gaussian ratio = lhs.coeff(m).coeff(mono) / z;
      if (!ratio.is_real()) return rep;
      rep.c = ratio.re;
      break;
    }
    if (rep.c) break;
  }
  const Fn c = rep.c ? Fn(Gaussian(*rep.c)) : Fn();
  for (const auto& [lhs, rhs] : pairs) {
    if (!(lhs == c * rhs)) return rep;
    rep.components_checked += static_cast<int>(std::max(lhs.terms().size(), rhs.terms().size()));
  }
  rep.consistent = true;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

FieldForm change_frame(const FieldForm& a, const CMatrix& images) {
  const int d = a.dim();
  std::vector<FieldForm> one(d + 1, FieldForm(d));
  for (int i = 1; i <= d; ++i)
    for (int x = 1; x <= d; ++x)
      if (!is_zero(images(i - 1, x - 1))) one[i].add(bit_of(x), Fn(images(i - 1, x - 1)));
  FieldForm out(d);
  for (const auto& [m, c] : a.terms()) {
    FieldForm term = FieldForm::constant(d, c);
    for (int i : indices_of(m)) term = wedge(term, one[i]);
    out += term;
  }
  return out;
}

void require_frame(const FieldForm& a, const HolomorphicFrame& fr) {
  if (a.dim() != 2 * fr.n) throw std::invalid_argument("frame dimension mismatch");
  if (!preserves_bivector(fr.J, bivector_of(fr.omega))) throw std::domain_error("J does not preserve the bivector");
}

FieldForm frame_exterior(const FieldForm& a, const HolomorphicFrame& fr, int parity) {
  FieldForm out(a.dim());
  for (const auto& [m, c] : a.terms())
    for (int x = 1; x <= a.dim(); ++x) {
      if (x % 2 != parity || has_index(m, x)) continue;
      Fn dc = frame_derivative(c, x, fr);
      if (!dc.is_zero()) out.add(m | bit_of(x), wedge_sign(bit_of(x), m) > 0 ? dc : -dc);
    }
  return out;
}

FieldForm frame_contract(const FieldForm& a, const HolomorphicFrame& fr) {
  Matrix<Fn> W(fr.w_f.rows(), fr.w_f.cols());
  for (int i = 0; i < W.rows(); ++i)
    for (int j = 0; j < W.cols(); ++j) W(i, j) = Fn(fr.w_f(i, j));
  return contract_bivector(W, a);
}

}  // namespace

FieldForm to_frame(const FieldForm& a, const HolomorphicFrame& fr) { return change_frame(a, fr.from_f); }
FieldForm from_frame(const FieldForm& a, const HolomorphicFrame& fr) { return change_frame(a, fr.to_f); }

Fn frame_derivative(const Fn& f, int slot, const HolomorphicFrame& fr) {
  Fn out;
  for (int i = 1; i <= 2 * fr.n; ++i) {
    const Gaussian& c = fr.from_f(i - 1, slot - 1);
    if (!is_zero(c)) out += partial(f, i).scaled(c);
  }
  return out;
}

std::optional<Bidegree> form_bidegree(const FieldForm& framed) {
  std::optional<Bidegree> out;
  for (const auto& [m, c] : framed.terms()) {
    Bidegree b = bidegree_of(m, 0);
    if (out && !(*out == b)) return std::nullopt;
    out = b;
  }
  return out;
}

FieldForm dolbeault_del(const FieldForm& framed, const HolomorphicFrame& fr) { return frame_exterior(framed, fr, 1); }
FieldForm dolbeault_delbar(const FieldForm& framed, const HolomorphicFrame& fr) {
  return frame_exterior(framed, fr, 0);
}

std::pair<FieldForm, FieldForm> dolbeault_deltas(const FieldForm& framed, const HolomorphicFrame& fr) {
  require_frame(framed, fr);
  FieldForm d0m1 = frame_contract(dolbeault_del(framed, fr), fr) - dolbeault_del(frame_contract(framed, fr), fr);
  FieldForm dm10 =
      frame_contract(dolbeault_delbar(framed, fr), fr) - dolbeault_delbar(frame_contract(framed, fr), fr);
  return {d0m1, dm10};
}

std::pair<FieldForm, FieldForm> quantum_dolbeault_split(const FieldForm& framed, const HolomorphicFrame& fr) {
  auto [d0m1, dm10] = dolbeault_deltas(framed, fr);
  return {dolbeault_del(framed, fr) - times_h(d0m1), dolbeault_delbar(framed, fr) - times_h(dm10)};
}

// ---------------------------------------------------------------------------

PoissonModel standard_symplectic(int n) {
  PoissonModel m;
  m.name = "standard_symplectic";
  m.dim = 2 * n;
  m.omega = standard_omega(n);
  m.w = PoissonField::constant(bivector_of(*m.omega));
  return m;
}

PoissonModel torus(int n, int N) {
  if (n < 1 || 2 * n > kMaxVars) throw std::invalid_argument("torus: dimension out of range");
  if (N < 0) throw std::invalid_argument("torus: negative mode bound");
  PoissonModel m = standard_symplectic(n);
  m.name = "torus";
  m.modes = N;
  return m;
}

PoissonModel lie_poisson_so3() {
  PoissonModel m;
  m.name = "lie_poisson_so3";
  m.dim = 3;
  m.w = PoissonField(3);
  m.w.set(1, 2, fn_x(3));
  m.w.set(2, 3, fn_x(1));
  m.w.set(3, 1, fn_x(2));
  return m;
}

PoissonModel heisenberg() {
  PoissonModel m;
  m.name = "heisenberg";
  m.dim = 3;
  m.w = PoissonField(3);
  m.w.set(1, 2, fn_x(3));
  return m;
}

PoissonModel non_poisson_example() {
  PoissonModel m;
  m.name = "non_poisson_example";
  m.dim = 3;
  m.w = PoissonField(3);
  m.w.set(1, 2, Fn(1));
  m.w.set(1, 3, fn_x(1));
  return m;
}

PoissonModel fixture(const std::string& name, int n, int N) {
  if (name == "standard_symplectic") return standard_symplectic(n);
  if (name == "torus") return torus(n, N);
  if (name == "lie_poisson_so3") return lie_poisson_so3();
  if (name == "heisenberg") return heisenberg();
  if (name == "non_poisson_example") return non_poisson_example();
  throw std::invalid_argument("unknown fixture: " + name);
}

FieldForm random_model_form(Rng& rng, const PoissonModel& m, int degree) {
  if (m.modes < 0) return random_poly_form(rng, m.dim, degree);
  FieldForm out(m.dim);
  auto blades = blades_of_degree(m.dim, degree);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> k(m.dim);
    for (int& kj : k) kj = rng.uniform(-m.modes, m.modes);
    Gaussian c(rng.rational(), rng.rational());
    out.add(blades[rng.uniform(0, static_cast<int>(blades.size()) - 1)], fn_mode(k).scaled(c));
  }
  return out;
}

}  // namespace qdr
