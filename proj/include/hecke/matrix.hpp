#pragma once

#include <vector>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Square matrix with rational-function entries over a shared variable set.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t n, const VarSet& vars);
    static PolyMatrix identity(std::size_t n, const VarSet& vars);

    std::size_t dim() const { return n_; }
    const VarSet& vars() const { return vars_; }
    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const RatFunc& s) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    RatFunc trace() const;
    bool entries_polynomial() const;

private:
    std::size_t n_ = 0;
    VarSet vars_;
    std::vector<RatFunc> e_;
};

// Matrix with polynomial entries, used where rational-function overhead
// is unwanted (characteristic polynomials, series ladders).
class MatPoly {
public:
    MatPoly() = default;
    MatPoly(std::size_t n, const VarSet& vars);
    static MatPoly identity(std::size_t n, const VarSet& vars);
    static MatPoly from(const PolyMatrix& m);  // requires polynomial entries

    std::size_t dim() const { return n_; }
    const VarSet& vars() const { return vars_; }
    MultiPoly& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    MatPoly operator+(const MatPoly& o) const;
    MatPoly operator-(const MatPoly& o) const;
    MatPoly operator*(const MatPoly& o) const;
    MatPoly scaled(const MultiPoly& s) const;
    bool operator==(const MatPoly& o) const;
    bool operator!=(const MatPoly& o) const { return !(*this == o); }

    MultiPoly trace() const;

private:
    std::size_t n_ = 0;
    VarSet vars_;
    std::vector<MultiPoly> e_;
};

// Coefficients of det(lambda I - M) by the Faddeev-LeVerrier
// recurrence; slot k holds the lambda^(n-k) coefficient (slot 0 is 1).
// det M = (-1)^n c[n] and tr(adj M) = (-1)^(n-1) c[n-1].
std::vector<MultiPoly> char_poly(const MatPoly& m);

}  // namespace hecke
