#include "qdr/poly.hpp"

#include <stdexcept>

namespace qdr {

int min_exponent(const Laurent& p) { return p.is_zero() ? 0 : p.terms().begin()->first.e; }
int max_exponent(const Laurent& p) { return p.is_zero() ? 0 : p.terms().rbegin()->first.e; }

Rational evaluate(const Laurent& p, const Rational& value) {
  Rational out = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.e < 0 && sgn(value) == 0) throw std::domain_error("negative power of h evaluated at 0");
    Rational pw = 1;
    Rational base = m.e >= 0 ? value : Rational(1) / value;
    for (int i = 0; i < (m.e >= 0 ? m.e : -m.e); ++i) pw *= base;
    out += c * pw;
  }
  return out;
}

namespace {

// Joins signed terms as "a + b - c".
class TermJoiner {
 public:
  void push(const Rational& c, const std::string& mono) {
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string body;
    if (mono.empty())
      body = to_string(a);
    else if (a == 1)
      body = mono;
    else
      body = to_string(a) + "*" + mono;
    if (out_.empty())
      out_ = (neg ? "-" : "") + body;
    else
      out_ += (neg ? " - " : " + ") + body;
  }
  void push_raw(const std::string& s) { out_ += out_.empty() ? s : " + " + s; }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string power_name(const std::string& base, int e) {
  if (e == 0) return "";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const Laurent& p) {
  TermJoiner j;
  for (const auto& [m, c] : p.terms()) j.push(c, power_name("h", m.e));
  return j.str();
}

// ---------------------------------------------------------------------------

HVec operator*(const HVec& a, const HVec& b) {
  HVec out;
  out.e.resize(std::max(a.e.size(), b.e.size()), 0);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] += a.e[i];
  for (std::size_t i = 0; i < b.e.size(); ++i) out.e[i] += b.e[i];
  while (!out.e.empty() && out.e.back() == 0) out.e.pop_back();
  return out;
}

HVec hvec_unit(int j, int power) {
  HVec v;
  if (power == 0) return v;
  v.e.assign(static_cast<std::size_t>(j) + 1, 0);
  v.e[static_cast<std::size_t>(j)] = power;
  return v;
}

Laurent specialize(const MultiH& p, const std::vector<Rational>& c) {
  Laurent out;
  for (const auto& [m, coef] : p.terms()) {
    Rational v = coef;
    int deg = 0;
    for (std::size_t j = 0; j < m.e.size(); ++j) {
      if (j >= c.size()) throw std::invalid_argument("specialize: too few values");
      for (int r = 0; r < m.e[j]; ++r) v *= c[j];
      deg += m.e[j];
    }
    out.add(HPow{deg}, v);
  }
  return out;
}

std::string to_string(const MultiH& p) {
  TermJoiner j;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += power_name("h" + std::to_string(i + 1), m.e[i]);
    }
    j.push(c, mono);
  }
  return j.str();
}

// ---------------------------------------------------------------------------

FnMono operator*(const FnMono& a, const FnMono& b) {
  FnMono out;
  out.h = static_cast<std::int16_t>(a.h + b.h);
  out.tau = static_cast<std::int16_t>(a.tau + b.tau);
  for (int i = 0; i < kMaxVars; ++i) {
    out.x[i] = static_cast<std::int8_t>(a.x[i] + b.x[i]);
    out.k[i] = static_cast<std::int8_t>(a.k[i] + b.k[i]);
  }
  return out;
}

Fn fn_h(int power) {
  FnMono m;
  m.h = static_cast<std::int16_t>(power);
  return Fn::monomial(m);
}

Fn fn_x(int var) {
  if (var < 1 || var > kMaxVars) throw std::invalid_argument("variable index out of range");
  FnMono m;
  m.x[var - 1] = 1;
  return Fn::monomial(m);
}

Fn fn_mode(const std::vector<int>& modes) {
  if (modes.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many modes");
  FnMono m;
  for (std::size_t i = 0; i < modes.size(); ++i) m.k[i] = static_cast<std::int8_t>(modes[i]);
  return Fn::monomial(m);
}

Fn fn_from(const Laurent& p) {
  Fn out;
  for (const auto& [m, c] : p.terms()) {
    FnMono fm;
    fm.h = static_cast<std::int16_t>(m.e);
    out.add(fm, Gaussian(c));
  }
  return out;
}

Fn partial(const Fn& f, int var) {
  const int v = var - 1;
  return f.transform([v](const FnMono& m, const Gaussian& c, Fn& out) {
    if (m.x[v] > 0) {
      FnMono d = m;
      d.x[v] = static_cast<std::int8_t>(d.x[v] - 1);
      out.add(d, c * Gaussian(m.x[v]));
    }
    if (m.k[v] != 0) {
      FnMono d = m;
      d.tau = static_cast<std::int16_t>(d.tau + 1);
      out.add(d, c * Gaussian(Rational(0), Rational(m.k[v])));
    }
  });
}

Fn conj(const Fn& f) {
  return f.transform([](const FnMono& m, const Gaussian& c, Fn& out) {
    FnMono d = m;
    for (auto& k : d.k) k = static_cast<std::int8_t>(-k);
    out.add(d, c.conj());
  });
}

Fn at_h_zero(const Fn& f) { return h_layer(f, 0); }

Fn h_layer(const Fn& f, int e) {
  return f.transform([e](const FnMono& m, const Gaussian& c, Fn& out) {
    if (m.h != e) return;
    FnMono d = m;
    d.h = 0;
    out.add(d, c);
  });
}

bool has_only_constants(const Fn& f) {
  for (const auto& [m, c] : f.terms()) {
    if (m.tau != 0) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (m.x[i] != 0 || m.k[i] != 0) return false;
  }
  return true;
}

Laurent to_laurent(const Fn& f) {
  if (!has_only_constants(f)) throw std::domain_error("function is not a constant in h");
  Laurent out;
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_real()) throw std::domain_error("function has a non-real coefficient");
    out.add(HPow{m.h}, c.re);
  }
  return out;
}

Fn h_shift(const Fn& f, int shift) {
  return f.transform([shift](const FnMono& m, const Gaussian& c, Fn& out) {
    FnMono d = m;
    d.h = static_cast<std::int16_t>(d.h + shift);
    out.add(d, c);
  });
}

std::string monomial_name(const FnMono& m, int nvars) {
  std::string mono;
  auto append = [&mono](const std::string& s) {
    if (s.empty()) return;
    if (!mono.empty()) mono += "*";
    mono += s;
  };
  append(power_name("h", m.h));
  append(power_name("tau", m.tau));
  for (int i = 0; i < nvars; ++i) append(power_name("x" + std::to_string(i + 1), m.x[i]));
  bool has_mode = false;
  for (int i = 0; i < nvars; ++i) has_mode = has_mode || m.k[i] != 0;
  if (has_mode) {
    std::string md = "mode(";
    for (int i = 0; i < nvars; ++i) md += (i ? "," : "") + std::to_string(m.k[i]);
    append(md + ")");
  }
  return mono;
}

std::string to_string(const Fn& f, int nvars) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : f.terms()) terms.push_back(format_term(c, monomial_name(m, nvars)));
  return join_terms(terms);
}

}  // namespace qdr
