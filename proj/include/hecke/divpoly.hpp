#pragma once

#include "hecke/multipoly.hpp"

namespace hecke {

// Division polynomials of y^2 = x^3 + ax + b, kept y-free: for even n
// the true psi_n equals y * body. All polynomials live in (a, b, x).
struct DivisionPolynomial {
    unsigned n;
    MultiPoly body;
    bool even;  // true psi_n = y * body
};

// x([l]P) = phi(x_P) / psi_sq(x_P); psi_sq is the y-free psi_l^2.
struct MultiplicationFormula {
    unsigned index;
    MultiPoly phi;
    MultiPoly psi_sq;
};

const VarSet& curve_vars();  // {a, b, x}
MultiPoly curve_cubic();     // x^3 + ax + b

DivisionPolynomial division_poly(unsigned n);
MultiPoly division_poly_square(unsigned n);  // y-free psi_n^2
MultiplicationFormula mult_formula(unsigned l);

}  // namespace hecke
