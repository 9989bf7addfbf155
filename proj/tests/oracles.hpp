#pragma once

// Reference implementations used only by the tests. Each one reaches its
// answer by a route that does not go through the library code it checks.

#include <map>
#include <vector>

#include "qdr/algebra.hpp"
#include "qdr/matrix.hpp"

namespace oracle {

using qdr::Laurent;
using qdr::QForm;
using qdr::Rational;
using qdr::RMatrix;

// Characteristic polynomial det(lambda I - A) by Faddeev-LeVerrier;
// coefficients in ascending order.
inline std::vector<Rational> faddeev_leverrier(const RMatrix& a) {
  const int n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  RMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    RMatrix next = a * m;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const RMatrix am = a * m;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

// e^i ^_h g = e^i ^ g + h sum_j w^{ij} (e_j -| g): the product with a single
// generator, read off from the definition with one contraction.
inline QForm generator_times(int i, const QForm& g, const RMatrix& w) {
  const int d = g.dim();
  QForm out = qdr::wedge(qdr::e_form(d, {i}), g);
  for (int j = 1; j <= d; ++j) {
    if (sgn(w(i - 1, j - 1)) == 0) continue;
    out += Laurent(qdr::hpow(1, w(i - 1, j - 1))) * qdr::insert_first(j, g);
  }
  return out;
}

// The quantum product rebuilt from the generator rule and associativity:
// writing a blade as e^i ^ rest,
//   e^i ^ rest = e^i ^_h rest - h sum_j w^{ij} (e_j -| rest),
// so (e^i ^ rest) ^_h b = e^i ^_h (rest ^_h b) - h ((w^{i.} -| rest) ^_h b).
inline QForm product(const QForm& a, const QForm& b, const RMatrix& w) {
  const int d = a.dim();
  QForm out(d);
  for (const auto& [m, c] : a.terms()) {
    if (m == 0) {
      out += c * b;
      continue;
    }
    const auto idx = qdr::indices_of(m);
    const int i = idx.front();
    const QForm rest = qdr::QForm::from_mask(d, m ^ qdr::bit_of(i), Laurent(1));
    QForm term = generator_times(i, product(rest, b, w), w);
    for (int j = 1; j <= d; ++j) {
      if (sgn(w(i - 1, j - 1)) == 0) continue;
      term -= Laurent(qdr::hpow(1, w(i - 1, j - 1))) * product(qdr::insert_first(j, rest), b, w);
    }
    out += c * term;
  }
  return out;
}

// The CP^n ring as a commutative ring in u_1..u_n, u_i = e^{2i-1} ^ e^{2i}.
// The blocks of the standard bivector do not interact, so the product of
// distinct u_i is classical, while within one block u ^_h u = 2hu - h^2.
// Elements map squarefree monomials (bitmasks over the u_i) to coefficients.
using URing = std::map<unsigned, Laurent>;

inline URing u_multiply(const URing& a, const URing& b) {
  URing out;
  auto add = [&](unsigned m, const Laurent& c) {
    auto& slot = out[m];
    slot += c;
    if (slot.is_zero()) out.erase(m);
  };
  for (const auto& [s, cs] : a)
    for (const auto& [t, ct] : b) {
      const unsigned both = s & t, sym = s ^ t;
      // each shared u_i contributes either 2h u_i or -h^2
      for (unsigned r = both;; r = (r - 1) & both) {
        const int kept = __builtin_popcount(r), dropped = __builtin_popcount(both) - kept;
        Rational coef = (dropped % 2 ? -1 : 1);
        for (int k = 0; k < kept; ++k) coef *= 2;
        add(sym | r, cs * ct * qdr::hpow(kept + 2 * dropped, coef));
        if (r == 0) break;
      }
    }
  return out;
}

// omega^j (classical) = j! e_j(u).
inline URing u_omega_power(int n, int j) {
  URing out;
  for (unsigned m = 0; m < (1U << n); ++m)
    if (__builtin_popcount(m) == j) out[m] = Laurent(qdr::factorial(j));
  return out;
}

// Coordinates in the basis omega^0..omega^n of a symmetric element.
inline std::vector<Laurent> u_to_omega_basis(const URing& x, int n) {
  std::vector<Laurent> out(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const unsigned rep = (1U << j) - 1;
    auto it = x.find(rep);
    if (it != x.end()) out[j] = it->second.scaled(1 / qdr::factorial(j));
  }
  return out;
}

}  // namespace oracle
