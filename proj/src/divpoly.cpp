#include "hecke/divpoly.hpp"

#include <mutex>
#include <vector>

namespace hecke {

const VarSet& curve_vars() {
    static const VarSet vs{Var::a, Var::b, Var::x};
    return vs;
}

MultiPoly curve_cubic() {
    static const MultiPoly f = MultiPoly::parse("x^3 + ax + b", curve_vars());
    return f;
}

namespace {

// bodies b_n with psi_n = b_n (n odd) or y * b_n (n even), y^2 reduced
// to x^3 + ax + b throughout
class BodyTable {
public:
    const MultiPoly& get(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure(n);
        return table_[n];
    }

private:
    void ensure(unsigned n) {
        if (table_.empty()) {
            const VarSet& vs = curve_vars();
            table_.push_back(MultiPoly(vs));                                       // b_0 = 0
            table_.push_back(MultiPoly::constant(vs, Rat(1)));                     // b_1
            table_.push_back(MultiPoly::constant(vs, Rat(2)));                     // b_2
            table_.push_back(MultiPoly::parse("3x^4 + 6ax^2 + 12bx - a^2", vs));   // b_3
            table_.push_back(MultiPoly::parse(
                "4(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3)", vs));     // b_4
        }
        while (table_.size() <= n) {
            unsigned k = static_cast<unsigned>(table_.size());
            unsigned m = k / 2;
            const MultiPoly f2 = curve_cubic() * curve_cubic();
            if (k % 2 == 1) {
                // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
                const MultiPoly& bm = table_[m];
                const MultiPoly& bm1 = table_[m + 1];
                const MultiPoly& bm2 = table_[m + 2];
                const MultiPoly& bmm = table_[m - 1];
                MultiPoly t1 = bm2 * bm.pow(3);
                MultiPoly t2 = bmm * bm1.pow(3);
                table_.push_back(m % 2 == 0 ? f2 * t1 - t2 : t1 - f2 * t2);
            } else {
                // 2y psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
                const MultiPoly& bm = table_[m];
                MultiPoly inner =
                    table_[m + 2] * table_[m - 1].pow(2) - table_[m - 2] * table_[m + 1].pow(2);
                table_.push_back(bm * inner / Rat(2));
            }
        }
    }

    std::mutex mu_;
    std::vector<MultiPoly> table_;
};

BodyTable& bodies() {
    static BodyTable t;
    return t;
}

}  // namespace

DivisionPolynomial division_poly(unsigned n) {
    if (n < 1) throw std::invalid_argument("division_poly requires n >= 1");
    return DivisionPolynomial{n, bodies().get(n), n % 2 == 0};
}

MultiPoly division_poly_square(unsigned n) {
    const MultiPoly& b = bodies().get(n);
    MultiPoly sq = b * b;
    return n % 2 == 0 ? curve_cubic() * sq : sq;
}

MultiplicationFormula mult_formula(unsigned l) {
    if (l < 2) throw std::invalid_argument("mult_formula requires l >= 2");
    MultiPoly psi_sq = division_poly_square(l);
    MultiPoly cross = bodies().get(l + 1) * bodies().get(l - 1);
    if (l % 2 == 1) cross = curve_cubic() * cross;
    MultiPoly phi = MultiPoly::variable(curve_vars(), Var::x) * psi_sq - cross;
    return MultiplicationFormula{l, std::move(phi), std::move(psi_sq)};
}

}  // namespace hecke
