#include "hecke/matrix.hpp"

namespace hecke {

PolyMatrix::PolyMatrix(std::size_t n, const VarSet& vars)
    : n_(n), vars_(vars), e_(n * n, RatFunc(vars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, const VarSet& vars) {
    PolyMatrix m(n, vars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc(vars, Rat(1));
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    PolyMatrix r(n_, vars_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    PolyMatrix r(n_, vars_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    PolyMatrix r(n_, vars_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            RatFunc s(vars_);
            for (std::size_t k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

PolyMatrix PolyMatrix::operator*(const RatFunc& s) const {
    PolyMatrix r(n_, vars_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

RatFunc PolyMatrix::trace() const {
    RatFunc s(vars_);
    for (std::size_t i = 0; i < n_; ++i) s = s + at(i, i);
    return s;
}

bool PolyMatrix::entries_polynomial() const {
    for (const auto& f : e_)
        if (!f.is_polynomial()) return false;
    return true;
}

MatPoly::MatPoly(std::size_t n, const VarSet& vars)
    : n_(n), vars_(vars), e_(n * n, MultiPoly(vars)) {}

MatPoly MatPoly::identity(std::size_t n, const VarSet& vars) {
    MatPoly m(n, vars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(vars, Rat(1));
    return m;
}

MatPoly MatPoly::from(const PolyMatrix& m) {
    MatPoly r(m.dim(), m.vars());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).as_polynomial();
    return r;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
    MatPoly r(n_, vars_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
    MatPoly r(n_, vars_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

MatPoly MatPoly::operator*(const MatPoly& o) const {
    MatPoly r(n_, vars_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            MultiPoly s(vars_);
            for (std::size_t k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

MatPoly MatPoly::scaled(const MultiPoly& s) const {
    MatPoly r(n_, vars_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool MatPoly::operator==(const MatPoly& o) const { return n_ == o.n_ && e_ == o.e_; }

MultiPoly MatPoly::trace() const {
    MultiPoly s(vars_);
    for (std::size_t i = 0; i < n_; ++i) s = s + at(i, i);
    return s;
}

std::vector<MultiPoly> char_poly(const MatPoly& m) {
    const std::size_t n = m.dim();
    const VarSet& vars = m.vars();
    std::vector<MultiPoly> c(n + 1, MultiPoly(vars));
    c[0] = MultiPoly::constant(vars, Rat(1));  // coefficient of lambda^n
    MatPoly Mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // Mk = M * (M_{k-1} + c_{k-1} I)
            MatPoly tmp = Mk;
            for (std::size_t i = 0; i < n; ++i) tmp.at(i, i) = tmp.at(i, i) + c[k - 1];
            Mk = m * tmp;
        }
        c[k] = Mk.trace() / Rat(-static_cast<long>(k));
    }
    return c;  // c[0]..c[n] are the lambda^n .. lambda^0 coefficients
}

}  // namespace hecke
