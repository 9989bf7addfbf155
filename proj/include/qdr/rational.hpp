#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qdr {

// Ground field: exact rationals. GMP arithmetic keeps results canonical, but
// the two-argument constructor does not; build fractions from canonical p/q.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(int n);
Rational binomial(int n, int k);

// Gaussian rational a + b*i. Used wherever sqrt(-1) has to be exact.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design of the scalar tower
  Gaussian(long r) : re(r) {}                 // NOLINT
  Gaussian(int r) : re(r) {}                  // NOLINT
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  Gaussian conj() const { return {re, -im}; }
  bool is_real() const { return sgn(im) == 0; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
      re *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational s = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

// Zero test usable from class templates, where a member is_zero() would hide
// the free overloads; polynomial types are found by argument-dependent lookup.
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}

/// "a/b" when real, otherwise "a/b+c/d*i" (or "a/b-c/d*i").
std::string to_string(const Gaussian& z);
Gaussian parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

/// One term of a printed sum: the coefficient is omitted when it is 1 and the
/// monomial is nonempty, written bare when it is a positive integer, and
/// parenthesized otherwise ("(-1)*h", "(1/2)*e1", "2*h*e1^e2").
std::string format_term(const Gaussian& c, const std::string& monomial);
/// Joins terms with " + "; "0" for an empty list.
std::string join_terms(const std::vector<std::string>& terms);

}  // namespace qdr
