#include "qdr/cpn.hpp"

#include <sstream>
#include <stdexcept>

namespace qdr {

namespace {

std::vector<QForm> classical_powers(int n) {
  const QForm omega = omega_form(standard_omega(n));
  std::vector<QForm> out{scalar_form(2 * n, Laurent(1))};
  for (int j = 1; j <= n; ++j) out.push_back(wedge(out.back(), omega));
  return out;
}

RingElement zero_element(int n) { return RingElement(static_cast<std::size_t>(n + 1)); }

RingElement scaled(const RingElement& a, const Laurent& s) {
  RingElement out = a;
  for (auto& c : out) c = c * s;
  return out;
}

void add_to(RingElement& a, const RingElement& b) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
}

}  // namespace

std::optional<RingElement> omega_coordinates(const QForm& a, int n) {
  if (a.dim() != 2 * n) throw std::invalid_argument("omega_coordinates: dimension mismatch");
  const auto powers = classical_powers(n);
  RingElement out = zero_element(n);
  for (int j = 0; j <= n; ++j) {
    // omega^j has coefficient j! on e1^...^e2j.
    const Mask lead = j == 0 ? Mask{0} : ((Mask{1} << (2 * j)) - 1);
    out[j] = a.coeff(lead).scaled(Rational(1) / factorial(j));
  }
  if (!(ring_to_form(out, n) == a)) return std::nullopt;
  return out;
}

QForm ring_to_form(const RingElement& c, int n) {
  const auto powers = classical_powers(n);
  QForm out(2 * n);
  for (int j = 0; j <= n && j < static_cast<int>(c.size()); ++j)
    if (!c[j].is_zero()) out += c[j] * powers[j];
  return out;
}

RingElement CPnRing::unit() const { return omega_power(0); }

RingElement CPnRing::omega_power(int j) const {
  RingElement out = zero_element(n);
  if (j <= n) out[j] = Laurent(1);
  return out;
}

RingElement CPnRing::multiply(const RingElement& a, const RingElement& b) const {
  RingElement out = zero_element(n);
  for (int k = 0; k <= n; ++k) {
    if (a[k].is_zero()) continue;
    for (int l = 0; l <= n; ++l)
      if (!b[l].is_zero()) add_to(out, scaled(table.at({k, l}), a[k] * b[l]));
  }
  return out;
}

RingElement CPnRing::power(const RingElement& a, int k) const {
  RingElement out = unit();
  for (int i = 0; i < k; ++i) out = multiply(a, out);
  return out;
}

bool CPnRing::symmetric() const {
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l < k; ++l)
      if (table.at({k, l}) != table.at({l, k})) return false;
  return true;
}

bool CPnRing::classical_limit_ok() const {
  for (const auto& [kl, c] : table) {
    const int top = kl.first + kl.second;
    for (int j = 0; j <= n; ++j) {
      const Rational expected = j == top ? Rational(1) : Rational(0);
      if (coeff(c[j], 0) != expected) return false;
    }
  }
  return true;
}

bool CPnRing::band_ok() const {
  for (const auto& [kl, c] : table) {
    const int lo = std::abs(kl.first - kl.second), hi = kl.first + kl.second;
    for (int j = 0; j <= n; ++j)
      if ((j < lo || j > hi) && !c[j].is_zero()) return false;
  }
  return true;
}

CPnRing cpn_structure_constants(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("cpn_structure_constants: need 1 <= n <= 5");
  const auto powers = classical_powers(n);
  const RMatrix w = bivector_of(standard_omega(n));
  CPnRing ring;
  ring.n = n;
  for (int k = 0; k <= n; ++k)
    for (int l = k; l <= n; ++l) {
      auto c = omega_coordinates(quantum_wedge(powers[k], powers[l], w), n);
      if (!c) throw std::runtime_error("product of omega powers left the omega-power span");
      ring.table[{k, l}] = *c;
      ring.table[{l, k}] = *c;
    }
  return ring;
}

bool table_associative(const CPnRing& ring, int limit) {
  for (int a = 0; a <= ring.n; ++a)
    for (int b = 0; b <= ring.n; ++b)
      for (int c = 0; c <= ring.n; ++c) {
        if (a + b + c > limit) continue;
        const RingElement x = ring.omega_power(a), y = ring.omega_power(b), z = ring.omega_power(c);
        if (ring.multiply(ring.multiply(x, y), z) != ring.multiply(x, ring.multiply(y, z))) return false;
      }
  return true;
}

NilpotencyReport verify_nilpotency(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_nilpotency: need 1 <= n <= 4");
  const int dim = 2 * n;
  const RMatrix w = bivector_of(standard_omega(n));
  NilpotencyReport r;
  r.n = n;
  QForm omega_h(dim);
  for (int i = 1; i <= n; ++i) omega_h += quantum_wedge(e_form(dim, {2 * i - 1}), e_form(dim, {2 * i}), w);
  const QForm shifted = omega_form(standard_omega(n)) - h_form(dim, 1, n);
  r.omega_h_literal = omega_h == shifted;
  r.previous_power = quantum_power(shifted, n, w);
  r.previous_power_nonzero = !r.previous_power.is_zero();
  r.top_power_vanishes = quantum_wedge(shifted, r.previous_power, w).is_zero();
  return r;
}

PowerExpansionReport omega_power_expansion(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("omega_power_expansion: need 1 <= n <= 4");
  const CPnRing ring = cpn_structure_constants(n);
  const RingElement omega = ring.omega_power(1);
  PowerExpansionReport r;
  r.n = n;
  r.computed = ring.power(omega, n + 1);
  r.printed = zero_element(n);
  r.binomial = zero_element(n);
  for (int k = 0; k <= n; ++k) {
    const RingElement pk = ring.power(omega, k);
    const int e = n + 1 - k;
    const Rational c = binomial(n + 1, k);
    add_to(r.printed, scaled(pk, hpow(e, ((n - k) % 2 ? -c : c))));
    Rational nn = 1;
    for (int i = 0; i < e; ++i) nn *= -n;  // (-n)^e
    add_to(r.binomial, scaled(pk, hpow(e, -c * nn)));
  }
  return r;
}

std::vector<RecursionRow> derived_recursion_report(int n) {
  const CPnRing ring = cpn_structure_constants(n);
  std::vector<RecursionRow> rows;
  for (int k = 1; k <= n; ++k) {
    const RingElement& c = ring.table.at({1, k});
    RecursionRow row;
    row.n = n;
    row.k = k;
    for (int j = 0; j <= n; ++j) {
      Laurent expected;
      if (j == k + 1) expected = Laurent(1);
      if (j == k) expected = hpow(1, coeff(c[j], 1));
      if (j == k - 1) expected = hpow(2, coeff(c[j], 2));
      if (c[j] != expected) throw std::runtime_error("omega ^_h omega^k is not of three-term shape");
    }
    row.a = coeff(c[k], 1);
    row.b = coeff(c[k - 1], 2);
    rows.push_back(row);
  }
  return rows;
}

LambdaReport first_chern_shift(int n) {
  // (omega + lambda h)^{n+1}_h is a polynomial in lambda; its omega^n
  // coefficient is linear in lambda, which pins lambda down.
  const CPnRing ring = cpn_structure_constants(n);
  const RingElement omega = ring.omega_power(1);
  RingElement at0 = omega, at1 = omega;
  at1[0] = hpow(1);
  const Rational c0 = coeff(ring.power(at0, n + 1)[n], 1);
  const Rational c1 = coeff(ring.power(at1, n + 1)[n], 1) - c0;
  LambdaReport r;
  if (sgn(c1) == 0) return r;
  const Rational lambda = -c0 / c1;
  RingElement x = omega;
  x[0] = hpow(1, lambda);
  for (const auto& c : ring.power(x, n + 1))
    if (!c.is_zero()) return r;
  r.lambda = lambda;
  r.unique = true;
  return r;
}

std::string to_string(const RingElement& c) {
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    if (c[j].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << to_string(c[j]) << ")*w^" << j;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace qdr
