#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdr/rational.hpp"

namespace qdr {

// Sparse polynomial over a commutative monoid of monomials. Mono must be
// totally ordered, default-construct to the identity and provide operator*.
// Zero coefficients are never stored.
template <class Mono, class Scalar>
class SparsePoly {
 public:
  using Terms = std::map<Mono, Scalar>;
  using mono_type = Mono;
  using scalar_type = Scalar;

  SparsePoly() = default;
  SparsePoly(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (!coeff_is_zero(c)) terms_.emplace(Mono{}, c);
  }
  SparsePoly(long c) : SparsePoly(Scalar(c)) {}  // NOLINT
  SparsePoly(int c) : SparsePoly(Scalar(c)) {}   // NOLINT

  static SparsePoly monomial(const Mono& m, const Scalar& c = Scalar(1)) {
    SparsePoly p;
    p.add(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(const Mono& m, const Scalar& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.terms_.size() == 1 && a.terms_.begin()->first == Mono{}) return b.scaled(a.terms_.begin()->second);
    if (b.terms_.size() == 1 && b.terms_.begin()->first == Mono{}) return a.scaled(b.terms_.begin()->second);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly scaled(const Scalar& s) const {
    SparsePoly out;
    if (coeff_is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * s);
    return out;
  }

  // Apply a monomial/coefficient map; f(m, c, out) adds into out.
  template <class F>
  SparsePoly transform(F&& f) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) f(m, c, out);
    return out;
  }

 private:
  Terms terms_;
};

template <class M, class S>
bool is_zero(const SparsePoly<M, S>& p) {
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// k[h, 1/h]

struct HPow {
  int e = 0;
  auto operator<=>(const HPow&) const = default;
};
inline HPow operator*(HPow a, HPow b) { return {a.e + b.e}; }

using Laurent = SparsePoly<HPow, Rational>;

inline Laurent hpow(int e, const Rational& c = 1) { return Laurent::monomial(HPow{e}, c); }
inline Rational coeff(const Laurent& p, int e) { return p.coeff(HPow{e}); }
int min_exponent(const Laurent& p);  // 0 for the zero polynomial
int max_exponent(const Laurent& p);
inline bool is_polynomial(const Laurent& p) { return p.is_zero() || min_exponent(p) >= 0; }
/// Substitute h := value (value must be nonzero if negative powers occur).
Rational evaluate(const Laurent& p, const Rational& value);
/// e.g. "2*h - h^2", "1", "-1/2*h^-1"; "0" for zero.
std::string to_string(const Laurent& p);

// ---------------------------------------------------------------------------
// k[h_1, ..., h_m]

struct HVec {
  std::vector<int> e;  // trailing zeros trimmed
  auto operator<=>(const HVec&) const = default;
};
HVec operator*(const HVec& a, const HVec& b);
HVec hvec_unit(int j, int power = 1);  // h_j^power, j 0-based

using MultiH = SparsePoly<HVec, Rational>;

/// Substitute h_j := c_j * t, producing a polynomial in t.
Laurent specialize(const MultiH& p, const std::vector<Rational>& c);
std::string to_string(const MultiH& p);

// ---------------------------------------------------------------------------
// Coefficient functions: Gaussian-rational combinations of
//   h^a * tau^b * x^alpha * exp(i <k, x>)
// tau is a formal symbol for 2*pi so derivatives of Fourier modes stay exact.

inline constexpr int kMaxVars = 8;

struct FnMono {
  std::int16_t h = 0;
  std::int16_t tau = 0;
  std::array<std::int8_t, kMaxVars> x{};
  std::array<std::int8_t, kMaxVars> k{};
  auto operator<=>(const FnMono&) const = default;
};
FnMono operator*(const FnMono& a, const FnMono& b);

using Fn = SparsePoly<FnMono, Gaussian>;

Fn fn_h(int power = 1);
Fn fn_x(int var);                           // x^var, 1-based
Fn fn_mode(const std::vector<int>& modes);  // exp(2*pi*i <k, x>)
Fn fn_from(const Laurent& p);

/// Partial derivative in x^var (1-based).  Modes contribute tau * i * k_var.
Fn partial(const Fn& f, int var);
Fn conj(const Fn& f);
/// Specialize h := 0 (drop all terms with positive h power).
Fn at_h_zero(const Fn& f);
/// Terms whose h-exponent equals e, with that power stripped.
Fn h_layer(const Fn& f, int e);
bool has_only_constants(const Fn& f);  // no x, no modes, no tau
/// Converts a function with only h-dependence and real coefficients.
Laurent to_laurent(const Fn& f);
/// Multiply every monomial by h^shift.
Fn h_shift(const Fn& f, int shift);
/// "h^2*tau*x1*mode(1,0)"; empty for the unit monomial.
std::string monomial_name(const FnMono& m, int nvars);
std::string to_string(const Fn& f, int nvars);

}  // namespace qdr
