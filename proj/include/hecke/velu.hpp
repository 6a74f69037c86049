#pragma once

#include "hecke/torsion.hpp"

namespace hecke {

// Weierstrass coefficients of the quotient curve E/<P>, as elements of
// the torsion algebra (odd prime N) or of the level-2 cubic algebra.
struct IsogenyCoefficientsOdd {
    unsigned level;
    TorsionElement aprime;
    TorsionElement bprime;
};

struct IsogenyCoefficientsTwo {
    CubicAlgebraElement aprime;  // -4a - 15e^2
    CubicAlgebraElement bprime;  // 22b + 14ae
};

IsogenyCoefficientsOdd isogenous_coefficients_odd(unsigned level);
IsogenyCoefficientsTwo isogenous_coefficients_two();

}  // namespace hecke
