#pragma once

#include "hecke/divpoly.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

const VarSet& base_vars();  // {a, b}; K = Q(a, b)

// Dense univariate polynomial over K, the working representation for
// arithmetic modulo the division polynomial.
struct KPoly {
    std::vector<RatFunc> c;  // c[k] multiplies x_P^k

    int deg() const;
    bool is_zero() const { return deg() < 0; }
    void trim();
    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator*(const RatFunc& s) const;
};

// Euclidean division over K; d must be nonzero.
std::pair<KPoly, KPoly> kpoly_divmod(const KPoly& p, const KPoly& d);

// Residue of a polynomial in x_P modulo psi_N, N an odd prime.
// Coordinates in the power basis {1, x_P, ..., x_P^(d-1)}, d = (N^2-1)/2.
class TorsionElement {
public:
    TorsionElement() = default;
    TorsionElement(unsigned level, std::vector<RatFunc> coeffs);

    static TorsionElement zero(unsigned level);
    static TorsionElement one(unsigned level);
    static TorsionElement x_power(unsigned level, unsigned k);  // x_P^k reduced
    static TorsionElement scalar(unsigned level, const RatFunc& s);
    // reduce p(a, b, x) modulo psi_N
    static TorsionElement from_poly(unsigned level, const MultiPoly& p);

    unsigned level() const { return level_; }
    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    TorsionElement operator+(const TorsionElement& o) const;
    TorsionElement operator-(const TorsionElement& o) const;
    TorsionElement operator*(const TorsionElement& o) const;
    TorsionElement operator*(const RatFunc& s) const;
    TorsionElement pow(unsigned n) const;
    bool operator==(const TorsionElement& o) const;
    bool operator!=(const TorsionElement& o) const { return !(*this == o); }

private:
    unsigned level_ = 0;
    std::vector<RatFunc> coeffs_;
};

// psi_N as a univariate polynomial over K (odd prime N)
const KPoly& torsion_modulus(unsigned level);

// multiplicative inverse in K[x_P]/(psi_N) by the extended Euclidean
// algorithm; throws if u shares a factor with psi_N
TorsionElement torsion_invert(const TorsionElement& u);

// x_{lP} for l in {1, ..., (N-1)/2}
TorsionElement x_multiple(unsigned l, unsigned level);

enum class BasisKind { power, symmetric_five };

struct TorsionBasis {
    unsigned level;
    BasisKind kind;
    std::vector<TorsionElement> elements;

    std::size_t dim() const { return elements.size(); }
};

TorsionBasis power_basis(unsigned level);
TorsionBasis symmetric_basis_five();  // {1, s1, p1, s2, p2, s3} of x_P, x_2P

// Matrix of multiplication by u on the span of the basis: column j
// holds the basis coordinates of u * basis[j]. Throws if some product
// leaves the span.
PolyMatrix regular_rep(const TorsionElement& u, const TorsionBasis& basis);

// Level-2 algebra Q(a,b)[e]/(e^3 + ae + b), basis {1, e, e^2}.
class CubicAlgebraElement {
public:
    CubicAlgebraElement();
    explicit CubicAlgebraElement(std::array<RatFunc, 3> coeffs);
    static CubicAlgebraElement e();
    static CubicAlgebraElement scalar(const RatFunc& s);

    const std::array<RatFunc, 3>& coeffs() const { return coeffs_; }

    CubicAlgebraElement operator+(const CubicAlgebraElement& o) const;
    CubicAlgebraElement operator-(const CubicAlgebraElement& o) const;
    CubicAlgebraElement operator*(const CubicAlgebraElement& o) const;
    CubicAlgebraElement operator*(const RatFunc& s) const;
    bool operator==(const CubicAlgebraElement& o) const { return coeffs_ == o.coeffs_; }

private:
    std::array<RatFunc, 3> coeffs_;
};

PolyMatrix cubic_rep(const CubicAlgebraElement& u);

}  // namespace hecke
