#include <algorithm>

#include "hecke/multipoly.hpp"

// Multivariate gcd: recursive content / primitive-part split with a
// subresultant polynomial remainder sequence in the top variable.

namespace hecke {

namespace {

// gcd of the rational coefficients, i.e. the factor making the
// polynomial integer-primitive. Positive; zero poly -> 0.
Rat rational_content(const MultiPoly& p) {
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

int top_var_index(const MultiPoly& p) {
    // highest-index variable with positive degree, -1 if constant
    int best = -1;
    for (const auto& [e, c] : p.terms()) {
        for (int i = static_cast<int>(e.size()) - 1; i > best; --i) {
            if (e[i] > 0) best = i;
        }
    }
    return best;
}

// dense coefficient list of p viewed as univariate in vars()[vi];
// coefficients keep the full variable set with exponent 0 at vi
std::vector<MultiPoly> uni_coeffs(const MultiPoly& p, std::size_t vi) {
    int d = std::max(0, p.degree_in(p.vars()[vi]));
    std::vector<MultiPoly> cs(static_cast<std::size_t>(d) + 1, MultiPoly(p.vars()));
    for (const auto& [e, c] : p.terms()) {
        Exps re = e;
        int k = re[vi];
        re[vi] = 0;
        cs[static_cast<std::size_t>(k)].add_term(re, c);
    }
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return cs;
}

MultiPoly from_uni(const std::vector<MultiPoly>& cs, std::size_t vi, const VarSet& vars) {
    MultiPoly r(vars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms()) {
            Exps ne = e;
            ne[vi] += static_cast<int>(k);
            r.add_term(ne, c);
        }
    }
    return r;
}

struct Uni {
    std::vector<MultiPoly> c;  // c[k] is the coefficient of t^k
    int deg() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (!c[k].is_zero()) return k;
        return -1;
    }
    const MultiPoly& lc() const { return c[static_cast<std::size_t>(deg())]; }
    bool is_zero() const { return deg() < 0; }
};

Uni uni_scale(const Uni& u, const MultiPoly& s) {
    Uni r = u;
    for (auto& ck : r.c) ck = ck * s;
    return r;
}

Uni uni_exact_div(const Uni& u, const MultiPoly& s) {
    Uni r = u;
    for (auto& ck : r.c) ck = ck.is_zero() ? ck : exact_div(ck, s);
    return r;
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) A = Q B + R
Uni pseudo_rem(Uni A, const Uni& B) {
    int db = B.deg();
    const MultiPoly& lb = B.lc();
    int steps = A.deg() - db + 1;
    while (!A.is_zero() && A.deg() >= db) {
        int da = A.deg();
        MultiPoly la = A.lc();
        for (auto& ck : A.c) ck = ck * lb;
        for (int k = 0; k <= db; ++k) {
            std::size_t ai = static_cast<std::size_t>(da - db + k);
            A.c[ai] = A.c[ai] - la * B.c[static_cast<std::size_t>(k)];
        }
        --steps;
    }
    if (steps > 0) {
        MultiPoly f = lb.pow(static_cast<unsigned>(steps));
        A = uni_scale(A, f);
    }
    return A;
}

// content of p wrt vars()[vi]: gcd of the univariate coefficients
MultiPoly content_wrt(const MultiPoly& p, std::size_t vi) {
    auto cs = uni_coeffs(p, vi);
    MultiPoly g(p.vars());
    for (const auto& ck : cs) {
        if (ck.is_zero()) continue;
        g = g.is_zero() ? normalize_primitive(ck) : poly_gcd(g, ck);
        if (g.is_constant()) break;
    }
    return g;
}

}  // namespace

MultiPoly normalize_primitive(const MultiPoly& p, Rat* scale) {
    if (p.is_zero()) {
        if (scale) *scale = 1;
        return p;
    }
    Rat cont = rational_content(p);
    if (p.leading_coeff() < 0) cont = -cont;
    if (scale) *scale = Rat(1) / cont;
    return p * (Rat(1) / cont);
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.vars() != d.vars()) throw std::invalid_argument("mismatched variable sets");
    MultiPoly rem = p;
    MultiPoly quot(p.vars());
    const Exps& de = d.leading_exps();
    while (!rem.is_zero()) {
        const Exps& re = rem.leading_exps();
        Exps qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) throw std::domain_error("not divisible");
        }
        Rat qc = rem.leading_coeff() / d.leading_coeff();
        MultiPoly t = MultiPoly::term(p.vars(), qe, qc);
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars() != q.vars()) throw std::invalid_argument("mismatched variable sets");
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0)");
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);

    const VarSet& vars = p.vars();
    MultiPoly A = normalize_primitive(p);
    MultiPoly B = normalize_primitive(q);
    if (A.is_constant() || B.is_constant())
        return MultiPoly::constant(vars, Rat(1));

    // common monomial factor
    Exps mins(vars.size(), -1);
    for (const MultiPoly* poly : {&A, &B}) {
        Exps m(vars.size(), INT32_MAX);
        for (const auto& [e, c] : poly->terms())
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        for (std::size_t i = 0; i < m.size(); ++i)
            mins[i] = mins[i] < 0 ? m[i] : std::min(mins[i], m[i]);
    }
    bool have_monomial = std::any_of(mins.begin(), mins.end(), [](int k) { return k > 0; });
    if (have_monomial) {
        MultiPoly mono = MultiPoly::term(vars, mins, Rat(1));
        MultiPoly g = poly_gcd(exact_div(A, MultiPoly::term(vars, [&] {
                                   Exps m(vars.size(), INT32_MAX);
                                   for (const auto& [e, c] : A.terms())
                                       for (std::size_t i = 0; i < m.size(); ++i)
                                           m[i] = std::min(m[i], e[i]);
                                   return m;
                               }(), Rat(1))),
                               exact_div(B, MultiPoly::term(vars, [&] {
                                   Exps m(vars.size(), INT32_MAX);
                                   for (const auto& [e, c] : B.terms())
                                       for (std::size_t i = 0; i < m.size(); ++i)
                                           m[i] = std::min(m[i], e[i]);
                                   return m;
                               }(), Rat(1))));
        return normalize_primitive(g * mono);
    }

    int tiA = top_var_index(A), tiB = top_var_index(B);
    std::size_t vi = static_cast<std::size_t>(std::max(tiA, tiB));
    Var t = vars[vi];
    if (A.degree_in(t) == 0 || B.degree_in(t) == 0) {
        // top variable missing from one side: gcd divides the contents
        if (A.degree_in(t) > 0) return poly_gcd(content_wrt(A, vi), B);
        if (B.degree_in(t) > 0) return poly_gcd(A, content_wrt(B, vi));
    }

    MultiPoly contA = content_wrt(A, vi);
    MultiPoly contB = content_wrt(B, vi);
    MultiPoly cont_gcd = poly_gcd(contA, contB);
    Uni UA{uni_coeffs(exact_div(A, contA), vi)};
    Uni UB{uni_coeffs(exact_div(B, contB), vi)};
    if (UA.deg() < UB.deg()) std::swap(UA, UB);

    // Brown's subresultant PRS
    MultiPoly g = MultiPoly::constant(vars, Rat(1));
    MultiPoly h = g;
    while (true) {
        int delta = UA.deg() - UB.deg();
        Uni R = pseudo_rem(UA, UB);
        if (R.is_zero()) break;
        if (R.deg() == 0) {
            // coprime primitive parts
            return cont_gcd;
        }
        UA = UB;
        UB = uni_exact_div(R, g * h.pow(static_cast<unsigned>(delta)));
        g = UA.lc();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_div(g.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    MultiPoly pp = from_uni(UB.c, vi, vars);
    pp = exact_div(pp, content_wrt(pp, vi));
    return normalize_primitive(cont_gcd * pp);
}

}  // namespace hecke
