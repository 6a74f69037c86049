#include "hecke/series.hpp"

namespace hecke {

namespace {

// split p into its A^i B^j slices, each a polynomial in the other vars
std::map<std::pair<int, int>, MultiPoly> ab_slices(const MultiPoly& p, const VarSet& rest) {
    auto ia = p.vars().index_of(Var::A);
    auto ib = p.vars().index_of(Var::B);
    std::map<std::pair<int, int>, MultiPoly> out;
    for (const auto& [e, c] : p.terms()) {
        int i = ia ? e[*ia] : 0;
        int j = ib ? e[*ib] : 0;
        Exps re = e;
        if (ia) re[*ia] = 0;
        if (ib) re[*ib] = 0;
        auto it = out.find({i, j});
        if (it == out.end()) it = out.emplace(std::make_pair(i, j), MultiPoly(p.vars())).first;
        it->second.add_term(re, c);
    }
    std::map<std::pair<int, int>, MultiPoly> shrunk;
    for (auto& [ij, slice] : out) shrunk.emplace(ij, slice.restricted(rest));
    return shrunk;
}

}  // namespace

std::map<std::pair<int, int>, MultiPoly> series_coefficients(const RatFunc& f,
                                                             int max_total_degree) {
    std::vector<Var> rest_vars;
    for (Var v : f.vars().vars())
        if (v != Var::A && v != Var::B) rest_vars.push_back(v);
    VarSet rest(rest_vars);

    auto num = ab_slices(f.num(), rest);
    auto den = ab_slices(f.den(), rest);

    auto d0 = den.find({0, 0});
    if (d0 == den.end() || d0->second.is_zero())
        throw std::domain_error("denominator not invertible as a power series in A, B");
    RatFunc inv_d0 = RatFunc(MultiPoly::constant(rest, Rat(1)), d0->second);

    std::map<std::pair<int, int>, RatFunc> coeffs;
    for (int d = 0; d <= max_total_degree; ++d) {
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            RatFunc acc(rest);
            if (auto it = num.find({i, j}); it != num.end()) acc = RatFunc(it->second);
            for (const auto& [kl, dk] : den) {
                auto [k, l] = kl;
                if (k == 0 && l == 0) continue;
                if (k > i || l > j) continue;
                acc = acc - RatFunc(dk) * coeffs.at({i - k, j - l});
            }
            coeffs.emplace(std::make_pair(i, j), acc * inv_d0);
        }
    }

    std::map<std::pair<int, int>, MultiPoly> out;
    for (const auto& [ij, c] : coeffs) out.emplace(ij, c.as_polynomial());
    return out;
}

}  // namespace hecke
