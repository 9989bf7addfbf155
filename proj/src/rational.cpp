#include "qdr/rational.hpp"

#include <stdexcept>

namespace qdr {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (is_zero(o)) throw std::domain_error("division by zero");
  if (sgn(o.im) == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Rational norm = o.re * o.re + o.im * o.im;
  return *this *= Gaussian(o.re / norm, -o.im / norm);
}

std::string to_string(const Gaussian& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string out = to_string(z.re);
  if (sgn(z.im) > 0)
    out += "+" + to_string(z.im);
  else
    out += to_string(z.im);
  return out + "*i";
}

Gaussian parse_gaussian(std::string_view text) {
  std::string s(text);
  if (s.size() < 2 || s.substr(s.size() - 2) != "*i") return Gaussian(parse_rational(s));
  std::string body = s.substr(0, s.size() - 2);
  // split at the sign that starts the imaginary part (not at position 0)
  auto pos = body.find_last_of("+-");
  if (pos == std::string::npos || pos == 0)
    return Gaussian(Rational(0), parse_rational(body));
  return Gaussian(parse_rational(body.substr(0, pos)), parse_rational(body.substr(pos)));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

std::string format_term(const Gaussian& c, const std::string& monomial) {
  std::string coef;
  if (c.is_real() && c.re == 1 && !monomial.empty())
    coef = "";
  else if (c.is_real() && sgn(c.re) > 0 && is_integer(c.re))
    coef = to_string(c.re);
  else
    coef = "(" + to_string(c) + ")";
  if (monomial.empty()) return coef;
  return coef.empty() ? monomial : coef + "*" + monomial;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) out += out.empty() ? t : " + " + t;
  return out;
}

}  // namespace qdr
