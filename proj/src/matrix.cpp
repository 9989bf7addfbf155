#include "qdr/matrix.hpp"

#include <sstream>

namespace qdr {

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::shift(const Rational& s) const {
  // Horner in the shifted variable.
  UPoly out;
  const UPoly lin = linear(s);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + constant(*it);
  return out;
}

UPoly UPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  UPoly out = constant(1), base = *this;
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  std::vector<Rational> q(r.size() >= d.c_.size() ? r.size() - d.c_.size() + 1 : 0, Rational(0));
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] / d.c_[dd];
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::divide_exact(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string body = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

UPoly char_poly(const RMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  RMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int p = -1;
    for (int i = j + 1; i < n; ++i)
      if (sgn(h(i, j)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h(p, k), h(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h(k, p), h(k, j + 1));
    }
    for (int i = j + 2; i < n; ++i) {
      if (sgn(h(i, j)) == 0) continue;
      Rational u = h(i, j) / h(j + 1, j);
      for (int k = 0; k < n; ++k) h(i, k) -= u * h(j + 1, k);
      for (int k = 0; k < n; ++k) h(k, j + 1) += u * h(k, i);
    }
  }
  // Leading principal minors of lambda*I - H.
  std::vector<UPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = UPoly::constant(1);
  for (int mm = 1; mm <= n; ++mm) {
    const int r = mm - 1;
    p[mm] = UPoly::linear(-h(r, r)) * p[mm - 1];
    Rational t = 1;
    for (int i = 1; i < mm; ++i) {
      t *= h(r - i + 1, r - i);
      if (sgn(t) == 0) break;
      p[mm] = p[mm] - UPoly::constant(h(r - i, r) * t) * p[mm - i - 1];
    }
  }
  return p[n];
}

namespace {

std::vector<mpz_class> small_divisors(mpz_class v, long limit) {
  std::vector<mpz_class> out;
  if (v < 0) v = -v;
  for (long d = 1; d <= limit && d <= v; ++d)
    if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(d))) out.emplace_back(d);
  return out;
}

}  // namespace

SpectrumFactors factor_rational_roots(const UPoly& p) {
  SpectrumFactors f;
  UPoly rest = p;
  if (rest.is_zero()) return f;
  int zero_mult = 0;
  while (rest.degree() > 0 && sgn(rest.coeff(0)) == 0) {
    rest = rest.divide_exact(UPoly::lambda());
    ++zero_mult;
  }
  if (zero_mult) f.rational_roots.emplace_back(Rational(0), zero_mult);
  // Integer-scaled copy for the rational root test.
  mpz_class lcd = 1;
  for (const auto& c : rest.coeffs()) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), c.get_den_mpz_t());
  mpz_class a0 = Rational(rest.coeff(0) * lcd).get_num();
  mpz_class an = Rational(rest.coeff(rest.degree()) * lcd).get_num();
  // Divisor search is bounded; any root beyond it stays in the remainder.
  constexpr long kLimit = 10000;
  auto nums = small_divisors(a0, kLimit);
  auto dens = small_divisors(an, kLimit);
  for (const auto& q : dens)
    for (const auto& pn : nums)
      for (int s : {1, -1}) {
        Rational r(pn * s, q);
        r.canonicalize();
        bool seen = false;
        for (const auto& [root, mult] : f.rational_roots) seen = seen || root == r;
        if (seen) continue;
        int mult = 0;
        while (rest.degree() > 0 && sgn(rest(r)) == 0) {
          rest = rest.divide_exact(UPoly::linear(-r));
          ++mult;
        }
        if (mult) f.rational_roots.emplace_back(r, mult);
      }
  Rational lead = rest.coeff(rest.degree());
  std::vector<Rational> monic;
  for (const auto& c : rest.coeffs()) monic.push_back(c / lead);
  f.remainder = UPoly(std::move(monic));
  return f;
}

std::string describe(const SpectrumFactors& f) {
  std::string out;
  for (const auto& [r, mult] : f.rational_roots) {
    std::string lin = sgn(r) == 0 ? "x" : (sgn(r) > 0 ? "x - " + to_string(r) : "x + " + to_string(Rational(-r)));
    std::string factor = "(" + lin + ")";
    if (mult > 1) factor += "^" + std::to_string(mult);
    out += out.empty() ? factor : " * " + factor;
  }
  if (f.remainder.degree() > 0) {
    std::string factor = "(" + to_string(f.remainder) + ")";
    out += out.empty() ? factor : " * " + factor;
  }
  return out.empty() ? "1" : out;
}

std::vector<std::vector<std::string>> to_strings(const RMatrix& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

std::string to_string(const RMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace qdr
