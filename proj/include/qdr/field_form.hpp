#pragma once

#include <string>
#include <vector>

#include "qdr/algebra.hpp"
#include "qdr/random.hpp"

namespace qdr {

// Differential forms sum f_I(x, h) dx^I on a coordinate chart or a torus.
// Coefficients are Fn, so h and Fourier modes ride along with the function.
using FieldForm = Exterior<Fn>;
// A vector field sum X^i(x) d/dx^i.
using VectorField = std::vector<Fn>;

FieldForm field_from(const QForm& a);
FieldForm dx_form(int dim, std::vector<int> idx, const Fn& f = Fn(1));
FieldForm times_h(const FieldForm& a, int power = 1);
/// Multiplies every coefficient by the function f.
FieldForm times(const Fn& f, const FieldForm& a);

/// "x1*dx2 + h", terms ordered as for QForm.
std::string to_string(const FieldForm& a, const std::string& prefix = "dx");

/// Partial derivative of every coefficient.
FieldForm partial(const FieldForm& a, int var);
/// d alpha = sum_j dx^j ^ d_j alpha.
FieldForm exterior_d(const FieldForm& a);
/// iota_X alpha (X in the first slot).
FieldForm contract_vector(const VectorField& X, const FieldForm& a);
/// Cartan: L_X = iota_X d + d iota_X.
FieldForm lie_derivative(const VectorField& X, const FieldForm& a);
/// [X, Y]^k = X(Y^k) - Y(X^k).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Random polynomial form of the given form degree; coefficients are random
/// rational combinations of monomials of degree <= max_poly_degree.
FieldForm random_poly_form(Rng& rng, int dim, int degree, int max_poly_degree = 2, int terms = 3);
Fn random_poly(Rng& rng, int nvars, int max_degree, int terms = 3);

}  // namespace qdr
