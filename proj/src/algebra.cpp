#include "qdr/algebra.hpp"

#include <stdexcept>

namespace qdr {

bool is_antisymmetric(const RMatrix& w) {
  if (!w.square()) return false;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j)
      if (w(i, j) != -w(j, i)) return false;
  return true;
}

void require_bivector(const RMatrix& w) {
  if (!is_antisymmetric(w)) throw std::invalid_argument("bivector must be antisymmetric");
}

QForm e_form(int dim, std::vector<int> idx, const Rational& c) {
  return QForm::blade(dim, std::move(idx), Laurent(c));
}

QForm scalar_form(int dim, const Laurent& c) { return QForm::constant(dim, c); }

QForm h_form(int dim, int power, const Rational& c) { return QForm::constant(dim, hpow(power, c)); }

namespace {

Matrix<Laurent> h_coupling(const RMatrix& w) {
  Matrix<Laurent> W(w.rows(), w.cols());
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) W(i, j) = hpow(1, w(i, j));
  return W;
}

}  // namespace

QForm quantum_wedge(const QForm& a, const QForm& b, const RMatrix& w) {
  if (w.rows() != a.dim() || w.cols() != a.dim()) throw std::invalid_argument("bivector dimension mismatch");
  return deformed_product(a, b, h_coupling(w));
}

MForm quantum_wedge_multi(const MForm& a, const MForm& b, const std::vector<RMatrix>& ws) {
  const int n = a.dim();
  Matrix<MultiH> W(n, n);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (ws[k].rows() != n || ws[k].cols() != n) throw std::invalid_argument("bivector dimension mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        W(i, j) += MultiH::monomial(hvec_unit(static_cast<int>(k)), ws[k](i, j));
  }
  return deformed_product(a, b, W);
}

MForm to_multi(const QForm& a) {
  MForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if (!(c.size() == 1 && c.terms().begin()->first.e == 0))
      throw std::invalid_argument("to_multi: coefficient depends on h");
    out.add(m, MultiH(c.terms().begin()->second));
  }
  return out;
}

QForm specialize(const MForm& a, const std::vector<Rational>& c) {
  QForm out(a.dim());
  for (const auto& [m, coef] : a.terms()) out.add(m, specialize(coef, c));
  return out;
}

QForm quantum_power(const QForm& a, int k, const RMatrix& w) {
  if (k < 0) throw std::invalid_argument("negative power");
  QForm out = scalar_form(a.dim(), Laurent(1));
  for (int i = 0; i < k; ++i) out = quantum_wedge(a, out, w);
  return out;
}

QForm quantum_exp(const QForm& a, const RMatrix& w, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  for (const auto& [m, c] : a.terms())
    for (const auto& [hp, r] : c.terms())
      if (degree_of(m) + 2 * hp.e < 1)
        throw std::invalid_argument("quantum_exp: argument has a monomial of total degree < 1");
  QForm out = scalar_form(a.dim(), Laurent(1));
  QForm power = out;
  for (int k = 1; k <= max_degree; ++k) {
    power = truncate_total_degree(quantum_wedge(a, power, w), max_degree);
    if (power.is_zero()) break;
    out += Laurent(Rational(1) / factorial(k)) * power;
  }
  return out;
}

std::string TotalDegree::str() const {
  switch (kind) {
    case Kind::zero:
      return "zero";
    case Kind::mixed:
      return "mixed";
    default:
      return std::to_string(value);
  }
}

namespace {

void merge_degree(TotalDegree& d, int value) {
  if (d.kind == TotalDegree::Kind::zero) {
    d = {TotalDegree::Kind::homogeneous, value};
  } else if (d.kind == TotalDegree::Kind::homogeneous && d.value != value) {
    d.kind = TotalDegree::Kind::mixed;
  }
}

}  // namespace

TotalDegree total_degree(const QForm& a) {
  TotalDegree d;
  for (const auto& [m, c] : a.terms())
    for (const auto& [hp, r] : c.terms()) merge_degree(d, degree_of(m) + 2 * hp.e);
  return d;
}

TotalDegree total_degree(const Laurent& c) {
  TotalDegree d;
  for (const auto& [hp, r] : c.terms()) merge_degree(d, 2 * hp.e);
  return d;
}

QForm truncate_total_degree(const QForm& a, int max_degree) {
  QForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    Laurent kept;
    for (const auto& [hp, r] : c.terms())
      if (degree_of(m) + 2 * hp.e <= max_degree) kept.add(hp, r);
    out.add(m, kept);
  }
  return out;
}

QForm h_coefficient(const QForm& a, int e) {
  QForm out(a.dim());
  for (const auto& [m, c] : a.terms()) out.add(m, Laurent(coeff(c, e)));
  return out;
}

QForm h_shift(const QForm& a, int shift) { return a.map([shift](const Laurent& c) { return hpow(shift) * c; }); }

std::string to_string(const QForm& a, const std::string& prefix) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : display_terms(a)) {
    const std::string blade = blade_name(m, prefix);
    for (const auto& [hp, r] : c.terms()) {
      std::string mono = hp.e == 0 ? "" : (hp.e == 1 ? "h" : "h^" + std::to_string(hp.e));
      if (!blade.empty()) mono += mono.empty() ? blade : "*" + blade;
      terms.push_back(format_term(Gaussian(r), mono));
    }
  }
  return join_terms(terms);
}

std::string to_string(const MForm& a) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : display_terms(a)) {
    std::string blade = blade_name(m);
    std::string coef = "(" + to_string(c) + ")";
    terms.push_back(blade.empty() ? coef : coef + "*" + blade);
  }
  return join_terms(terms);
}

Fn moyal_product(const Fn& u, const Fn& v, const RMatrix& w) {
  const int n = w.rows();
  if (!w.square() || n > kMaxVars) throw std::invalid_argument("moyal_product: bad bivector");
  auto check = [n](const Fn& f) {
    for (const auto& [m, c] : f.terms()) {
      if (m.tau != 0) throw std::invalid_argument("moyal_product: polynomial arguments only");
      for (int i = 0; i < kMaxVars; ++i) {
        if (m.k[i] != 0) throw std::invalid_argument("moyal_product: polynomial arguments only");
        if (i >= n && m.x[i] != 0) throw std::invalid_argument("moyal_product: dimension mismatch");
      }
    }
  };
  check(u);
  check(v);

  using Key = std::pair<FnMono, FnMono>;
  std::map<Key, Gaussian> layer;
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms()) layer[{mu, mv}] += cu * cv;

  Fn out;
  for (int order = 1; !layer.empty(); ++order) {
    for (const auto& [k, c] : layer) out.add(k.first * k.second, c);
    std::map<Key, Gaussian> next;
    for (const auto& [k, c] : layer)
      for (int i = 0; i < n; ++i) {
        if (k.first.x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (k.second.x[j] == 0 || sgn(w(i, j)) == 0) continue;
          FnMono a = k.first, b = k.second;
          Gaussian coef = c * Gaussian(w(i, j) * int{a.x[i]} * int{b.x[j]} / order);
          a.x[i] = static_cast<std::int8_t>(a.x[i] - 1);
          b.x[j] = static_cast<std::int8_t>(b.x[j] - 1);
          a.h = static_cast<std::int16_t>(a.h + 1);
          Gaussian& slot = next[{a, b}];
          slot += coef;
        }
      }
    std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
    layer = std::move(next);
  }
  return out;
}

}  // namespace qdr
