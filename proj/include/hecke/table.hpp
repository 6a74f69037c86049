#pragma once

#include <map>
#include <utility>

#include "hecke/rational.hpp"

namespace hecke {

// Matrix coefficients of the Hecke operator in the monomial basis:
// entries[(i,j)][(k,l)] is the coefficient of a^k b^l in T_N(a^i b^j).
// Zero entries are absent; nonzero ones satisfy 4i+6j = 4k+6l.
struct CoefficientTable {
    unsigned level = 0;
    int max_weight = 0;
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rat>> entries;

    bool operator==(const CoefficientTable& o) const {
        return level == o.level && entries == o.entries;
    }
};

// monomials a^i b^j of weight exactly k, ordered by increasing j
std::vector<std::pair<int, int>> monomials_of_weight(int k);
// all (i, j) with 4i + 6j <= max_weight
std::vector<std::pair<int, int>> monomials_up_to_weight(int max_weight);

}  // namespace hecke
