#include "qdr/field_form.hpp"

#include <stdexcept>

namespace qdr {

FieldForm field_from(const QForm& a) {
  FieldForm out(a.dim());
  for (const auto& [m, c] : a.terms()) out.add(m, fn_from(c));
  return out;
}

FieldForm dx_form(int dim, std::vector<int> idx, const Fn& f) { return FieldForm::blade(dim, std::move(idx), f); }

FieldForm times_h(const FieldForm& a, int power) {
  return a.map([power](const Fn& c) { return h_shift(c, power); });
}

FieldForm times(const Fn& f, const FieldForm& a) { return f * a; }

std::string to_string(const FieldForm& a, const std::string& prefix) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : display_terms(a)) {
    const std::string blade = blade_name(m, prefix);
    for (const auto& [mono, z] : c.terms()) {
      std::string name = monomial_name(mono, a.dim());
      if (!blade.empty()) name += name.empty() ? blade : "*" + blade;
      terms.push_back(format_term(z, name));
    }
  }
  return join_terms(terms);
}

FieldForm partial(const FieldForm& a, int var) {
  return a.map([var](const Fn& c) { return partial(c, var); });
}

FieldForm exterior_d(const FieldForm& a) {
  FieldForm out(a.dim());
  for (const auto& [m, c] : a.terms())
    for (int j = 1; j <= a.dim(); ++j) {
      if (has_index(m, j)) continue;
      Fn dc = partial(c, j);
      if (dc.is_zero()) continue;
      out.add(m | bit_of(j), wedge_sign(bit_of(j), m) > 0 ? dc : -dc);
    }
  return out;
}

FieldForm contract_vector(const VectorField& X, const FieldForm& a) {
  if (static_cast<int>(X.size()) != a.dim()) throw std::invalid_argument("vector field dimension mismatch");
  return insert_first(X, a);
}

FieldForm lie_derivative(const VectorField& X, const FieldForm& a) {
  return contract_vector(X, exterior_d(a)) + exterior_d(contract_vector(X, a));
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  if (X.size() != Y.size()) throw std::invalid_argument("vector field dimension mismatch");
  const int n = static_cast<int>(X.size());
  VectorField out(n);
  for (int k = 0; k < n; ++k)
    for (int j = 1; j <= n; ++j) out[k] += X[j - 1] * partial(Y[k], j) - Y[j - 1] * partial(X[k], j);
  return out;
}

Fn random_poly(Rng& rng, int nvars, int max_degree, int terms) {
  Fn f;
  for (int t = 0; t < terms; ++t) {
    Fn mono(rng.rational());
    const int deg = rng.uniform(0, max_degree);
    for (int k = 0; k < deg; ++k) mono = mono * fn_x(rng.uniform(1, nvars));
    f += mono;
  }
  return f;
}

FieldForm random_poly_form(Rng& rng, int dim, int degree, int max_poly_degree, int terms) {
  FieldForm out(dim);
  auto blades = blades_of_degree(dim, degree);
  for (int t = 0; t < terms; ++t) {
    Mask m = blades[rng.uniform(0, static_cast<int>(blades.size()) - 1)];
    out.add(m, random_poly(rng, dim, max_poly_degree, 2));
  }
  return out;
}

}  // namespace qdr
