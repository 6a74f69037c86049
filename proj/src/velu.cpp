#include "hecke/velu.hpp"

namespace hecke {

IsogenyCoefficientsOdd isogenous_coefficients_odd(unsigned level) {
    RatFunc a(base_vars());
    RatFunc b(base_vars());
    a = RatFunc(MultiPoly::variable(base_vars(), Var::a));
    b = RatFunc(MultiPoly::variable(base_vars(), Var::b));

    TorsionElement s1 = TorsionElement::zero(level);  // sum of x_{lP}
    TorsionElement s2 = TorsionElement::zero(level);  // sum of squares
    TorsionElement s3 = TorsionElement::zero(level);  // sum of cubes
    unsigned half = (level - 1) / 2;
    for (unsigned l = 1; l <= half; ++l) {
        TorsionElement xl = x_multiple(l, level);
        s1 = s1 + xl;
        s2 = s2 + xl * xl;
        s3 = s3 + xl * xl * xl;
    }
    Rat nm1(static_cast<long>(level) - 1);
    TorsionElement aprime = TorsionElement::scalar(level, a * (Rat(1) - Rat(5) * nm1)) -
                            s2 * RatFunc(base_vars(), Rat(30));
    TorsionElement bprime = TorsionElement::scalar(level, b * (Rat(1) - Rat(14) * nm1)) -
                            s3 * RatFunc(base_vars(), Rat(70)) -
                            s1 * (a * Rat(42));
    return IsogenyCoefficientsOdd{level, std::move(aprime), std::move(bprime)};
}

IsogenyCoefficientsTwo isogenous_coefficients_two() {
    RatFunc a(MultiPoly::variable(base_vars(), Var::a));
    RatFunc b(MultiPoly::variable(base_vars(), Var::b));
    CubicAlgebraElement e = CubicAlgebraElement::e();
    CubicAlgebraElement aprime =
        CubicAlgebraElement::scalar(a * Rat(-4)) - (e * e) * RatFunc(base_vars(), Rat(15));
    CubicAlgebraElement bprime =
        CubicAlgebraElement::scalar(b * Rat(22)) + e * (a * Rat(14));
    return IsogenyCoefficientsTwo{std::move(aprime), std::move(bprime)};
}

}  // namespace hecke
