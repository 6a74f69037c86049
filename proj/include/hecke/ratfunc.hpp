#pragma once

#include "hecke/multipoly.hpp"

namespace hecke {

// Canonical rational function: gcd(num, den) = 1, den integer-primitive
// with positive leading coefficient under the fixed monomial order.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const VarSet& vars)
        : num_(MultiPoly(vars)), den_(MultiPoly::constant(vars, Rat(1))) {}
    RatFunc(const VarSet& vars, const Rat& c)
        : num_(MultiPoly::constant(vars, c)), den_(MultiPoly::constant(vars, Rat(1))) {}
    explicit RatFunc(MultiPoly p);
    RatFunc(MultiPoly num, MultiPoly den);  // normalizes

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarSet& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // requires is_polynomial()
    MultiPoly as_polynomial() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Rat& c) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rat evaluate(const std::vector<Rat>& point) const;
    std::string str() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

inline RatFunc ratfunc_normalize(MultiPoly num, MultiPoly den) {
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace hecke
