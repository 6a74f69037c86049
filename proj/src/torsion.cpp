#include "hecke/torsion.hpp"

#include <array>
#include <map>
#include <mutex>

namespace hecke {

const VarSet& base_vars() {
    static const VarSet vs{Var::a, Var::b};
    return vs;
}

namespace {

RatFunc kzero() { return RatFunc(base_vars()); }
RatFunc kone() { return RatFunc(base_vars(), Rat(1)); }

bool is_odd_prime(unsigned n) {
    if (n < 3 || n % 2 == 0) return false;
    for (unsigned d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void check_level(unsigned n) {
    if (!is_odd_prime(n)) throw std::invalid_argument("level must be an odd prime");
}

std::size_t torsion_dim(unsigned n) { return (static_cast<std::size_t>(n) * n - 1) / 2; }

// MultiPoly in (a,b,x) -> univariate in x over K
KPoly kpoly_from(const MultiPoly& p) {
    int d = std::max(0, p.degree_in(Var::x));
    KPoly r;
    r.c.assign(static_cast<std::size_t>(d) + 1, kzero());
    auto xi = p.vars().index_of(Var::x);
    for (const auto& [e, c] : p.terms()) {
        int k = xi ? e[*xi] : 0;
        Exps re = e;
        if (xi) re[*xi] = 0;
        MultiPoly t = MultiPoly::term(p.vars(), re, c).restricted(base_vars());
        r.c[static_cast<std::size_t>(k)] = r.c[static_cast<std::size_t>(k)] + RatFunc(t);
    }
    r.trim();
    return r;
}

}  // namespace

int KPoly::deg() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (!c[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

void KPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

KPoly KPoly::operator+(const KPoly& o) const {
    KPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), kzero());
    for (std::size_t k = 0; k < c.size(); ++k) r.c[k] = c[k];
    for (std::size_t k = 0; k < o.c.size(); ++k) r.c[k] = r.c[k] + o.c[k];
    r.trim();
    return r;
}

KPoly KPoly::operator-(const KPoly& o) const {
    return *this + (o * RatFunc(base_vars(), Rat(-1)));
}

KPoly KPoly::operator*(const KPoly& o) const {
    KPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, kzero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
    }
    r.trim();
    return r;
}

KPoly KPoly::operator*(const RatFunc& s) const {
    KPoly r = *this;
    for (auto& ck : r.c) ck = ck * s;
    r.trim();
    return r;
}

std::pair<KPoly, KPoly> kpoly_divmod(const KPoly& p, const KPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    KPoly q, r = p;
    int dd = d.deg();
    RatFunc inv_lead = kone() / d.c[static_cast<std::size_t>(dd)];
    int dr = r.deg();
    if (dr >= dd) q.c.assign(static_cast<std::size_t>(dr - dd) + 1, kzero());
    while ((dr = r.deg()) >= dd) {
        std::size_t shift = static_cast<std::size_t>(dr - dd);
        RatFunc f = r.c[static_cast<std::size_t>(dr)] * inv_lead;
        q.c[shift] = q.c[shift] + f;
        for (int k = 0; k <= dd; ++k) {
            std::size_t ri = shift + static_cast<std::size_t>(k);
            r.c[ri] = r.c[ri] - f * d.c[static_cast<std::size_t>(k)];
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

const KPoly& torsion_modulus(unsigned level) {
    check_level(level);
    static std::mutex mu;
    static std::map<unsigned, KPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(level);
    if (it == cache.end()) it = cache.emplace(level, kpoly_from(division_poly(level).body)).first;
    return it->second;
}

TorsionElement::TorsionElement(unsigned level, std::vector<RatFunc> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    check_level(level);
    if (coeffs_.size() != torsion_dim(level))
        throw std::invalid_argument("torsion coordinate length mismatch");
}

TorsionElement TorsionElement::zero(unsigned level) {
    check_level(level);
    return TorsionElement(level, std::vector<RatFunc>(torsion_dim(level), kzero()));
}

TorsionElement TorsionElement::one(unsigned level) {
    TorsionElement t = zero(level);
    t.coeffs_[0] = kone();
    return t;
}

TorsionElement TorsionElement::scalar(unsigned level, const RatFunc& s) {
    TorsionElement t = zero(level);
    t.coeffs_[0] = s;
    return t;
}

TorsionElement TorsionElement::x_power(unsigned level, unsigned k) {
    check_level(level);
    std::size_t d = torsion_dim(level);
    if (k < d) {
        TorsionElement t = zero(level);
        t.coeffs_[k] = kone();
        return t;
    }
    KPoly p;
    p.c.assign(k + 1, kzero());
    p.c[k] = kone();
    auto [q, r] = kpoly_divmod(p, torsion_modulus(level));
    TorsionElement t = zero(level);
    for (std::size_t i = 0; i < r.c.size(); ++i) t.coeffs_[i] = r.c[i];
    return t;
}

TorsionElement TorsionElement::from_poly(unsigned level, const MultiPoly& p) {
    KPoly kp = kpoly_from(p);
    auto [q, r] = kpoly_divmod(kp, torsion_modulus(level));
    TorsionElement t = zero(level);
    for (std::size_t i = 0; i < r.c.size(); ++i) t.coeffs_[i] = r.c[i];
    return t;
}

bool TorsionElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TorsionElement TorsionElement::operator+(const TorsionElement& o) const {
    if (level_ != o.level_) throw std::invalid_argument("level mismatch");
    TorsionElement r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
    return r;
}

TorsionElement TorsionElement::operator-(const TorsionElement& o) const {
    if (level_ != o.level_) throw std::invalid_argument("level mismatch");
    TorsionElement r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] - o.coeffs_[i];
    return r;
}

TorsionElement TorsionElement::operator*(const TorsionElement& o) const {
    if (level_ != o.level_) throw std::invalid_argument("level mismatch");
    KPoly u{coeffs_}, v{o.coeffs_};
    u.trim();
    v.trim();
    KPoly prod = u * v;
    auto [q, r] = kpoly_divmod(prod, torsion_modulus(level_));
    TorsionElement t = zero(level_);
    for (std::size_t i = 0; i < r.c.size(); ++i) t.coeffs_[i] = r.c[i];
    return t;
}

TorsionElement TorsionElement::operator*(const RatFunc& s) const {
    TorsionElement r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
}

TorsionElement TorsionElement::pow(unsigned n) const {
    TorsionElement r = one(level_);
    TorsionElement base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return r;
}

bool TorsionElement::operator==(const TorsionElement& o) const {
    return level_ == o.level_ && coeffs_ == o.coeffs_;
}

TorsionElement torsion_invert(const TorsionElement& u) {
    if (u.is_zero()) throw std::domain_error("cannot invert zero");
    const KPoly& modulus = torsion_modulus(u.level());
    // extended Euclid: maintain r = s * u (mod psi)
    KPoly r0 = modulus, r1{u.coeffs()};
    r1.trim();
    KPoly s0, s1;
    s1.c = {kone()};
    while (!r1.is_zero()) {
        auto [q, rem] = kpoly_divmod(r0, r1);
        KPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.deg() != 0)
        throw std::domain_error("element shares a factor with the division polynomial");
    KPoly inv = s0 * (kone() / r0.c[0]);
    auto [q, rem] = kpoly_divmod(inv, modulus);
    TorsionElement t = TorsionElement::zero(u.level());
    std::vector<RatFunc> coeffs(t.dim(), RatFunc(base_vars()));
    for (std::size_t i = 0; i < rem.c.size(); ++i) coeffs[i] = rem.c[i];
    return TorsionElement(u.level(), std::move(coeffs));
}

TorsionElement x_multiple(unsigned l, unsigned level) {
    check_level(level);
    if (l < 1 || l > (level - 1) / 2) throw std::invalid_argument("multiple out of range");
    if (l == 1) return TorsionElement::x_power(level, 1);
    MultiplicationFormula mf = mult_formula(l);
    TorsionElement phi = TorsionElement::from_poly(level, mf.phi);
    TorsionElement psi_sq = TorsionElement::from_poly(level, mf.psi_sq);
    return phi * torsion_invert(psi_sq);
}

TorsionBasis power_basis(unsigned level) {
    check_level(level);
    TorsionBasis b{level, BasisKind::power, {}};
    std::size_t d = torsion_dim(level);
    b.elements.reserve(d);
    for (std::size_t k = 0; k < d; ++k)
        b.elements.push_back(TorsionElement::x_power(level, static_cast<unsigned>(k)));
    return b;
}

TorsionBasis symmetric_basis_five() {
    TorsionElement x1 = x_multiple(1, 5);
    TorsionElement x2 = x_multiple(2, 5);
    TorsionBasis b{5, BasisKind::symmetric_five, {}};
    b.elements = {
        TorsionElement::one(5),
        x1 + x2,
        x1 * x2,
        x1 * x1 + x2 * x2,
        (x1 * x2) * (x1 * x2),
        x1.pow(3) + x2.pow(3),
    };
    return b;
}

PolyMatrix regular_rep(const TorsionElement& u, const TorsionBasis& basis) {
    const std::size_t d = u.dim();
    const std::size_t m = basis.dim();
    // augmented system [B | u*b_1 ... u*b_m] over K
    std::vector<std::vector<RatFunc>> aug(d, std::vector<RatFunc>(m + m, kzero()));
    for (std::size_t j = 0; j < m; ++j) {
        const auto& bj = basis.elements[j];
        if (bj.level() != u.level()) throw std::invalid_argument("level mismatch");
        for (std::size_t i = 0; i < d; ++i) aug[i][j] = bj.coeffs()[i];
        TorsionElement prod = u * bj;
        for (std::size_t i = 0; i < d; ++i) aug[i][m + j] = prod.coeffs()[i];
    }
    // exact Gaussian elimination, first nonzero pivot in column order
    std::vector<std::size_t> pivot_row_of(m, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < d; ++col) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = row; r < d; ++r) {
            if (!aug[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == SIZE_MAX) throw std::domain_error("basis elements are linearly dependent");
        std::swap(aug[row], aug[pr]);
        RatFunc inv = kone() / aug[row][col];
        for (std::size_t c = col; c < m + m; ++c) aug[row][c] = aug[row][c] * inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == row || aug[r][col].is_zero()) continue;
            RatFunc f = aug[r][col];
            for (std::size_t c = col; c < m + m; ++c)
                aug[r][c] = aug[r][c] - f * aug[row][c];
        }
        pivot_row_of[col] = row;
        ++row;
    }
    // rows below the pivots must be zero on the RHS (consistency)
    for (std::size_t r = row; r < d; ++r)
        for (std::size_t c = m; c < m + m; ++c)
            if (!aug[r][c].is_zero())
                throw std::domain_error("product leaves the span of the basis");
    PolyMatrix rep(m, base_vars());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) rep.at(i, j) = aug[pivot_row_of[i]][m + j];
    return rep;
}

CubicAlgebraElement::CubicAlgebraElement() : coeffs_{kzero(), kzero(), kzero()} {}

CubicAlgebraElement::CubicAlgebraElement(std::array<RatFunc, 3> coeffs)
    : coeffs_(std::move(coeffs)) {}

CubicAlgebraElement CubicAlgebraElement::e() {
    return CubicAlgebraElement({kzero(), kone(), kzero()});
}

CubicAlgebraElement CubicAlgebraElement::scalar(const RatFunc& s) {
    return CubicAlgebraElement({s, kzero(), kzero()});
}

CubicAlgebraElement CubicAlgebraElement::operator+(const CubicAlgebraElement& o) const {
    return CubicAlgebraElement(
        {coeffs_[0] + o.coeffs_[0], coeffs_[1] + o.coeffs_[1], coeffs_[2] + o.coeffs_[2]});
}

CubicAlgebraElement CubicAlgebraElement::operator-(const CubicAlgebraElement& o) const {
    return CubicAlgebraElement(
        {coeffs_[0] - o.coeffs_[0], coeffs_[1] - o.coeffs_[1], coeffs_[2] - o.coeffs_[2]});
}

CubicAlgebraElement CubicAlgebraElement::operator*(const CubicAlgebraElement& o) const {
    // convolve, then fold e^3 = -ae - b and e^4 = -ae^2 - be
    RatFunc pa(base_vars());
    RatFunc pb(base_vars());
    {
        MultiPoly ma = MultiPoly::variable(base_vars(), Var::a);
        MultiPoly mb = MultiPoly::variable(base_vars(), Var::b);
        pa = RatFunc(ma);
        pb = RatFunc(mb);
    }
    std::array<RatFunc, 5> raw{kzero(), kzero(), kzero(), kzero(), kzero()};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) raw[i + j] = raw[i + j] + coeffs_[i] * o.coeffs_[j];
    std::array<RatFunc, 3> out{raw[0], raw[1], raw[2]};
    out[0] = out[0] - pb * raw[3];
    out[1] = out[1] - pa * raw[3] - pb * raw[4];
    out[2] = out[2] - pa * raw[4];
    return CubicAlgebraElement(out);
}

CubicAlgebraElement CubicAlgebraElement::operator*(const RatFunc& s) const {
    return CubicAlgebraElement({coeffs_[0] * s, coeffs_[1] * s, coeffs_[2] * s});
}

PolyMatrix cubic_rep(const CubicAlgebraElement& u) {
    PolyMatrix rep(3, base_vars());
    std::array<CubicAlgebraElement, 3> basis{
        CubicAlgebraElement::scalar(kone()),
        CubicAlgebraElement::e(),
        CubicAlgebraElement::e() * CubicAlgebraElement::e(),
    };
    for (std::size_t j = 0; j < 3; ++j) {
        CubicAlgebraElement prod = u * basis[j];
        for (std::size_t i = 0; i < 3; ++i) rep.at(i, j) = prod.coeffs()[i];
    }
    return rep;
}

}  // namespace hecke
