#pragma once

#include <vector>

#include "hecke/table.hpp"

namespace hecke {

// Truncated q-expansion with exact rational coefficients. Deliberately
// independent of the polynomial machinery: the verification path shares
// only the rational number layer with the symbolic one.
struct QSeries {
    std::vector<Rat> c;  // c[n] is the coefficient of q^n
    int weight = 0;

    int order() const { return static_cast<int>(c.size()) - 1; }

    QSeries truncated(int order) const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;  // truncates to min order
    QSeries operator*(const Rat& s) const;
    bool operator==(const QSeries& o) const { return c == o.c; }
};

enum class EisensteinKind { a, b, e };

QSeries eisenstein_series(EisensteinKind which, int order);
QSeries monomial_series(int i, int j, int order);  // a^i b^j
// the normalized cusp form q + O(q^2); its scale is solved for, not
// hard-coded
QSeries delta_series(int order);

// (T_N f)_n = f_{Nn} + N^{k-1} f_{n/N}; input must extend to order
// out_order * N
QSeries hecke_on_series(const QSeries& f, int weight, unsigned level, int out_order);

// Solve f = sum c_{k'l'} a^{k'} b^{l'} over the weight-k monomials.
// Over-determined rows act as a consistency check.
std::map<std::pair<int, int>, Rat> express_in_monomials(const QSeries& f, int weight);

CoefficientTable oracle_table(unsigned level, int max_weight);

}  // namespace hecke
