#pragma once

#include <map>
#include <utility>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Power-series expansion of f in the variables A, B around A = B = 0:
// returns the coefficient of A^i B^j, as a polynomial in the remaining
// variables, for all i + j <= max_total_degree. The denominator of f
// must have a nonzero term free of A and B, and every requested
// coefficient must come out polynomial.
std::map<std::pair<int, int>, MultiPoly> series_coefficients(const RatFunc& f,
                                                             int max_total_degree);

}  // namespace hecke
