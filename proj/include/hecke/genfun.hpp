#pragma once

#include "hecke/series.hpp"
#include "hecke/table.hpp"
#include "hecke/velu.hpp"

namespace hecke {

const VarSet& genfun_vars();  // {a, b, A, B}

struct GeneratingFunction {
    unsigned level;
    BasisKind basis;
    Rat normalization;  // c_N
    RatFunc value;      // canonical element of Q(a, b, A, B)
};

// representation matrices of the isogenous coefficients a', b' over
// Q(a, b), for the chosen basis (level 2 always uses {1, e, e^2})
std::pair<PolyMatrix, PolyMatrix> rep_matrices(unsigned level, BasisKind basis);

BasisKind default_basis(unsigned level);
std::size_t rep_dimension(unsigned level, BasisKind basis);
Rat normalization_constant(unsigned level, BasisKind basis);

// M = (I - A rho(a'))(I - B rho(b')) with polynomial entries; throws
// std::domain_error if the representation has non-polynomial entries
MatPoly build_M(unsigned level, BasisKind basis);

// F_N = c_N tr M^{-1} = c_N tr(adj M)/det M, fully canonicalized.
// Supported for rep_dimension <= 8; larger dimensions are served by the
// series route only.
GeneratingFunction generating_function(unsigned level, BasisKind basis);

// Neumann route: the A^i B^j coefficient of tr M^{-1} is
// tr(rho(b')^j rho(a')^i); independent of the exact route above
CoefficientTable coefficient_table(unsigned level, BasisKind basis, int max_weight);

// sum of the diagonal coefficients c_{ijij} over the weight-k monomials
Rat trace_on_weight(unsigned level, int weight, BasisKind basis);
Rat trace_on_weight(unsigned level, int weight);

constexpr std::size_t kMaxExactDimension = 8;

}  // namespace hecke
