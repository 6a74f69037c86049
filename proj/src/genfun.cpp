#include "hecke/genfun.hpp"

namespace hecke {

const VarSet& genfun_vars() {
    static const VarSet vs{Var::a, Var::b, Var::A, Var::B};
    return vs;
}

BasisKind default_basis(unsigned level) {
    return level == 5 ? BasisKind::symmetric_five : BasisKind::power;
}

std::size_t rep_dimension(unsigned level, BasisKind basis) {
    if (level == 2) return 3;
    if (basis == BasisKind::symmetric_five) {
        if (level != 5) throw std::invalid_argument("symmetric basis is specific to level 5");
        return 6;
    }
    return (static_cast<std::size_t>(level) * level - 1) / 2;
}

Rat normalization_constant(unsigned level, BasisKind basis) {
    long N = static_cast<long>(level);
    if (level == 2) return Rat(1, 2);
    if (basis == BasisKind::symmetric_five) return Rat(1, N);
    // power basis works over Gamma_pm(N); the trace overcounts by (N-1)/2
    Rat c(2, N * (N - 1));
    c.canonicalize();
    return c;
}

std::pair<PolyMatrix, PolyMatrix> rep_matrices(unsigned level, BasisKind basis) {
    if (level == 2) {
        IsogenyCoefficientsTwo iso = isogenous_coefficients_two();
        return {cubic_rep(iso.aprime), cubic_rep(iso.bprime)};
    }
    TorsionBasis tb =
        basis == BasisKind::symmetric_five ? symmetric_basis_five() : power_basis(level);
    if (basis == BasisKind::symmetric_five && level != 5)
        throw std::invalid_argument("symmetric basis is specific to level 5");
    IsogenyCoefficientsOdd iso = isogenous_coefficients_odd(level);
    return {regular_rep(iso.aprime, tb), regular_rep(iso.bprime, tb)};
}

MatPoly build_M(unsigned level, BasisKind basis) {
    auto [ra, rb] = rep_matrices(level, basis);
    if (!ra.entries_polynomial() || !rb.entries_polynomial())
        throw std::domain_error("representation matrices are not polynomial in this basis");
    const VarSet& vars = genfun_vars();
    std::size_t n = ra.dim();
    MultiPoly va = MultiPoly::variable(vars, Var::A);
    MultiPoly vb = MultiPoly::variable(vars, Var::B);
    MatPoly fa = MatPoly::identity(n, vars);
    MatPoly fb = MatPoly::identity(n, vars);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            fa.at(i, j) = fa.at(i, j) - va * ra.at(i, j).as_polynomial().lifted(vars);
            fb.at(i, j) = fb.at(i, j) - vb * rb.at(i, j).as_polynomial().lifted(vars);
        }
    }
    return fa * fb;
}

GeneratingFunction generating_function(unsigned level, BasisKind basis) {
    std::size_t n = rep_dimension(level, basis);
    if (n > kMaxExactDimension)
        throw std::domain_error("exact mode unsupported at this matrix dimension");
    MatPoly m = build_M(level, basis);
    std::vector<MultiPoly> cp = char_poly(m);
    // det M = (-1)^n c[n], tr(adj M) = (-1)^(n-1) c[n-1]
    MultiPoly det = n % 2 == 0 ? cp[n] : -cp[n];
    MultiPoly tr_adj = n % 2 == 1 ? cp[n - 1] : -cp[n - 1];
    Rat c = normalization_constant(level, basis);
    RatFunc value = RatFunc(tr_adj * c, det);
    return GeneratingFunction{level, basis, c, std::move(value)};
}

namespace {

// common-denominator form of a rational-function matrix
struct ClearedMatrix {
    MatPoly num;
    MultiPoly den;
};

ClearedMatrix clear_denominators(const PolyMatrix& m) {
    const VarSet& vars = m.vars();
    MultiPoly den = MultiPoly::constant(vars, Rat(1));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const MultiPoly& d = m.at(i, j).den();
            den = exact_div(den * d, poly_gcd(den, d));
        }
    }
    MatPoly num(m.dim(), vars);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            num.at(i, j) = m.at(i, j).num() * exact_div(den, m.at(i, j).den());
    return {std::move(num), std::move(den)};
}

MultiPoly trace_product(const MatPoly& u, const MatPoly& v) {
    MultiPoly s(u.vars());
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t k = 0; k < u.dim(); ++k) s = s + u.at(r, k) * v.at(k, r);
    return s;
}

}  // namespace

CoefficientTable coefficient_table(unsigned level, BasisKind basis, int max_weight) {
    auto [ra, rb] = rep_matrices(level, basis);
    ClearedMatrix ca = clear_denominators(ra);
    ClearedMatrix cb = clear_denominators(rb);
    Rat c = normalization_constant(level, basis);
    std::size_t n = ra.dim();

    int imax = max_weight / 4, jmax = max_weight / 6;
    std::vector<MatPoly> pa{MatPoly::identity(n, base_vars())};
    std::vector<MultiPoly> da{MultiPoly::constant(base_vars(), Rat(1))};
    for (int i = 1; i <= imax; ++i) {
        pa.push_back(pa.back() * ca.num);
        da.push_back(da.back() * ca.den);
    }
    std::vector<MatPoly> pb{MatPoly::identity(n, base_vars())};
    std::vector<MultiPoly> db{MultiPoly::constant(base_vars(), Rat(1))};
    for (int j = 1; j <= jmax; ++j) {
        pb.push_back(pb.back() * cb.num);
        db.push_back(db.back() * cb.den);
    }

    CoefficientTable table;
    table.level = level;
    table.max_weight = max_weight;
    for (auto [i, j] : monomials_up_to_weight(max_weight)) {
        MultiPoly tr = trace_product(pb[static_cast<std::size_t>(j)], pa[static_cast<std::size_t>(i)]);
        RatFunc entry(tr * c, da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]);
        MultiPoly p = entry.as_polynomial();  // Hecke images of forms are forms
        std::map<std::pair<int, int>, Rat> row;
        for (const auto& [e, coeff] : p.terms()) row[{e[0], e[1]}] = coeff;
        if (!row.empty()) table.entries[{i, j}] = std::move(row);
    }
    return table;
}

Rat trace_on_weight(unsigned level, int weight, BasisKind basis) {
    if (weight < 0 || weight % 2 != 0)
        throw std::invalid_argument("weight must be even and non-negative");
    CoefficientTable t = coefficient_table(level, basis, weight);
    Rat total(0);
    for (auto [i, j] : monomials_of_weight(weight)) {
        auto it = t.entries.find({i, j});
        if (it == t.entries.end()) continue;
        auto jt = it->second.find({i, j});
        if (jt != it->second.end()) total += jt->second;
    }
    return total;
}

Rat trace_on_weight(unsigned level, int weight) {
    return trace_on_weight(level, weight, default_basis(level));
}

}  // namespace hecke
