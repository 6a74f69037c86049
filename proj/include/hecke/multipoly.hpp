#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Global variable universe, in the fixed order a < b < x < e < A < B.
enum class Var : std::uint8_t { a = 0, b = 1, x = 2, e = 3, A = 4, B = 5 };

const char* var_name(Var v);
std::optional<Var> var_from_name(char c);

// Ordered subset of the variable universe; order always follows the
// global one regardless of construction order.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<Var> vs);
    explicit VarSet(const std::vector<Var>& vs);

    std::size_t size() const { return vars_.size(); }
    Var operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<Var>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(Var v) const;
    bool contains(Var v) const { return index_of(v).has_value(); }
    bool operator==(const VarSet& o) const { return vars_ == o.vars_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    std::vector<Var> vars_;
};

using Exps = std::vector<int>;

// Graded reverse-lexicographic order on exponent vectors, "greater"
// flavour so that std::map iteration starts at the leading monomial.
struct GrevlexGreater {
    bool operator()(const Exps& u, const Exps& v) const;
};

// Sparse multivariate polynomial over Q in a fixed variable set.
// Invariants: no explicit zero coefficients; every stored exponent
// vector has length |vars|.
class MultiPoly {
public:
    using TermMap = std::map<Exps, Rat, GrevlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}
    MultiPoly(VarSet vars, const Rat& c);

    static MultiPoly constant(const VarSet& vars, const Rat& c);
    static MultiPoly variable(const VarSet& vars, Var v, int power = 1);
    static MultiPoly term(const VarSet& vars, const Exps& e, const Rat& c);

    // Recursive-descent parser for fixture literals, e.g.
    // "3x^4 + 6ax^2 + 12bx - a^2" or "(16b^2-4a^3)/5".
    static MultiPoly parse(const std::string& text, const VarSet& vars);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    const Rat& leading_coeff() const;  // under grevlex; requires nonzero
    const Exps& leading_exps() const;
    Rat coeff(const Exps& e) const;
    int degree_in(Var v) const;  // -1 for the zero polynomial
    int total_degree() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly operator/(const Rat& c) const;
    MultiPoly pow(unsigned n) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    void add_term(const Exps& e, const Rat& c);  // accumulates, drops zeros

    // Same polynomial viewed in a superset of the variables.
    MultiPoly lifted(const VarSet& bigger) const;
    // Drop variables that occur with exponent zero everywhere.
    MultiPoly restricted(const VarSet& smaller) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    std::string str() const;

private:
    void check_compatible(const MultiPoly& o) const;

    VarSet vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// g = poly_gcd(p, q): divides both, integer-primitive, positive leading
// coefficient. Subresultant PRS with recursive content extraction.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Exact division; throws std::domain_error if d does not divide p.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

// Scale p by the rational that makes it integer-primitive with positive
// leading coefficient; returns the applied factor via *scale if non-null.
MultiPoly normalize_primitive(const MultiPoly& p, Rat* scale = nullptr);

// Weight grading wt(a)=4 wt(b)=6 wt(x)=2 wt(e)=2 wt(A)=-4 wt(B)=-6.
int var_weight(Var v);
// Weight of p if homogeneous, nullopt otherwise. Zero and constants
// report weight 0.
std::optional<int> weight_of(const MultiPoly& p);

}  // namespace hecke
