#include "hecke/ratfunc.hpp"

namespace hecke {

RatFunc::RatFunc(MultiPoly p)
    : num_(std::move(p)), den_(MultiPoly::constant(num_.vars(), Rat(1))) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw std::invalid_argument("mismatched variable sets");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rat scale;
    den_ = normalize_primitive(den_, &scale);
    num_ = num_ * scale;
}

MultiPoly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not polynomial");
    return num_ / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return RatFunc(vars());
    // cross-cancel before multiplying to keep intermediates small
    MultiPoly g1 = poly_gcd(num_, o.den_);
    MultiPoly g2 = poly_gcd(o.num_, den_);
    return RatFunc(exact_div(num_, g1) * exact_div(o.num_, g2),
                   exact_div(den_, g2) * exact_div(o.den_, g1));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw std::domain_error("division by zero");
    return *this * RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::operator*(const Rat& c) const {
    if (c == 0) return RatFunc(vars());
    RatFunc r = *this;
    r.num_ = r.num_ * c;
    Rat scale;
    r.den_ = normalize_primitive(r.den_, &scale);
    r.num_ = r.num_ * scale;
    return r;
}

Rat RatFunc::evaluate(const std::vector<Rat>& point) const {
    Rat d = den_.evaluate(point);
    if (d == 0) throw std::domain_error("evaluation at pole");
    return num_.evaluate(point) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return as_polynomial().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hecke
