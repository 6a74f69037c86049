#include "hecke/qexp.hpp"

#include <stdexcept>

namespace hecke {

std::vector<std::pair<int, int>> monomials_of_weight(int k) {
    std::vector<std::pair<int, int>> out;
    if (k < 0 || k % 2 != 0) return out;
    for (int j = 0; 6 * j <= k; ++j) {
        if ((k - 6 * j) % 4 == 0) out.emplace_back((k - 6 * j) / 4, j);
    }
    return out;
}

std::vector<std::pair<int, int>> monomials_up_to_weight(int max_weight) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; 6 * j <= max_weight; ++j)
        for (int i = 0; 4 * i + 6 * j <= max_weight; ++i) out.emplace_back(i, j);
    return out;
}

QSeries QSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    QSeries r{std::vector<Rat>(c.begin(), c.begin() + order + 1), weight};
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    int n = std::min(order(), o.order());
    QSeries r{std::vector<Rat>(static_cast<std::size_t>(n) + 1), weight};
    for (int k = 0; k <= n; ++k) r.c[k] = c[k] + o.c[k];
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    int n = std::min(order(), o.order());
    QSeries r{std::vector<Rat>(static_cast<std::size_t>(n) + 1), weight};
    for (int k = 0; k <= n; ++k) r.c[k] = c[k] - o.c[k];
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    int n = std::min(order(), o.order());
    QSeries r{std::vector<Rat>(static_cast<std::size_t>(n) + 1), weight + o.weight};
    for (int i = 0; i <= n; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.c[j] == 0) continue;
            r.c[i + j] += c[i] * o.c[j];
        }
    }
    return r;
}

QSeries QSeries::operator*(const Rat& s) const {
    QSeries r = *this;
    for (auto& k : r.c) k *= s;
    return r;
}

namespace {

// sum of d^power over divisors d of n, optionally odd divisors only
Rat divisor_sum(int n, int power, bool odd_only) {
    mpz_class total(0);
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (odd_only && d % 2 == 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(power));
        total += t;
    }
    return Rat(total);
}

}  // namespace

QSeries eisenstein_series(EisensteinKind which, int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    QSeries r{std::vector<Rat>(static_cast<std::size_t>(order) + 1), 0};
    switch (which) {
        case EisensteinKind::a:
            // a = -(1/3)(1 + 240 sum sigma_3(n) q^n), weight 4
            r.weight = 4;
            r.c[0] = Rat(-1, 3);
            for (int n = 1; n <= order; ++n) r.c[n] = Rat(-80) * divisor_sum(n, 3, false);
            break;
        case EisensteinKind::b:
            // b = (2/27)(1 - 504 sum sigma_5(n) q^n), weight 6
            r.weight = 6;
            r.c[0] = Rat(2, 27);
            for (int n = 1; n <= order; ++n) r.c[n] = Rat(-112, 3) * divisor_sum(n, 5, false);
            break;
        case EisensteinKind::e:
            // e = -(2/3)[1 + 24 sum (sum over odd d | n of d) q^n], weight 2
            r.weight = 2;
            r.c[0] = Rat(-2, 3);
            for (int n = 1; n <= order; ++n) r.c[n] = Rat(-16) * divisor_sum(n, 1, true);
            break;
    }
    for (auto& q : r.c) q.canonicalize();
    return r;
}

QSeries monomial_series(int i, int j, int order) {
    QSeries r{std::vector<Rat>(static_cast<std::size_t>(order) + 1), 4 * i + 6 * j};
    r.c[0] = 1;
    QSeries ea = eisenstein_series(EisensteinKind::a, order);
    QSeries eb = eisenstein_series(EisensteinKind::b, order);
    for (int k = 0; k < i; ++k) r = r * ea;
    for (int k = 0; k < j; ++k) r = r * eb;
    r.weight = 4 * i + 6 * j;
    return r;
}

QSeries delta_series(int order) {
    // some rational multiple of 4a^3 + 27b^2 is the normalized cusp form;
    // solve for the multiple that makes the q^1 coefficient 1
    QSeries a3 = monomial_series(3, 0, order);
    QSeries b2 = monomial_series(0, 2, order);
    QSeries disc = a3 * Rat(4) + b2 * Rat(27);
    if (disc.c[0] != 0) throw std::logic_error("discriminant combination is not cuspidal");
    if (order < 1 || disc.c[1] == 0) throw std::invalid_argument("order too small for delta");
    QSeries r = disc * (Rat(1) / disc.c[1]);
    r.weight = 12;
    return r;
}

QSeries hecke_on_series(const QSeries& f, int weight, unsigned level, int out_order) {
    long N = static_cast<long>(level);
    if (f.order() < out_order * N)
        throw std::invalid_argument("input series too short for the Hecke image");
    Rat nk1;  // N^(weight-1), weight >= 0 so this can be 1/N for weight 0
    {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(N),
                      static_cast<unsigned long>(weight >= 1 ? weight - 1 : 0));
        nk1 = weight >= 1 ? Rat(p) : Rat(1, N);
    }
    QSeries r{std::vector<Rat>(static_cast<std::size_t>(out_order) + 1), weight};
    for (int n = 0; n <= out_order; ++n) {
        r.c[n] = f.c[static_cast<std::size_t>(n * N)];
        if (n % N == 0) r.c[n] += nk1 * f.c[static_cast<std::size_t>(n / N)];
    }
    return r;
}

std::map<std::pair<int, int>, Rat> express_in_monomials(const QSeries& f, int weight) {
    auto mons = monomials_of_weight(weight);
    std::size_t m = mons.size();
    if (m == 0) {
        if (weight == 0) {
            // weight-0 space is the constants
            for (int n = 1; n <= f.order(); ++n)
                if (f.c[n] != 0) throw std::domain_error("series not in the span");
            std::map<std::pair<int, int>, Rat> out;
            if (f.c[0] != 0) out[{0, 0}] = f.c[0];
            return out;
        }
        throw std::domain_error("no monomials of the requested weight");
    }
    std::size_t rows = static_cast<std::size_t>(f.order()) + 1;
    if (rows < m + 1) throw std::invalid_argument("truncation too short for the solve");
    // columns: monomial series; last column: f
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(m + 1));
    for (std::size_t j = 0; j < m; ++j) {
        QSeries s = monomial_series(mons[j].first, mons[j].second, f.order());
        for (std::size_t r = 0; r < rows; ++r) aug[r][j] = s.c[r];
    }
    for (std::size_t r = 0; r < rows; ++r) aug[r][m] = f.c[r];

    std::vector<std::size_t> pivot_row(m, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = row; r < rows; ++r)
            if (aug[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) throw std::domain_error("monomial basis degenerate at truncation");
        std::swap(aug[row], aug[pr]);
        Rat inv = Rat(1) / aug[row][col];
        for (std::size_t c2 = col; c2 <= m; ++c2) aug[row][c2] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rat fac = aug[r][col];
            for (std::size_t c2 = col; c2 <= m; ++c2) aug[r][c2] -= fac * aug[row][c2];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (aug[r][m] != 0) throw std::domain_error("series not in the monomial span");

    std::map<std::pair<int, int>, Rat> out;
    for (std::size_t j = 0; j < m; ++j) {
        Rat v = aug[pivot_row[j]][m];
        if (v != 0) out[mons[j]] = v;
    }
    return out;
}

CoefficientTable oracle_table(unsigned level, int max_weight) {
    CoefficientTable table;
    table.level = level;
    table.max_weight = max_weight;
    for (auto [i, j] : monomials_up_to_weight(max_weight)) {
        int k = 4 * i + 6 * j;
        int dim = static_cast<int>(monomials_of_weight(k).size());
        int out_order = dim + 4;  // guard rows make the solve over-determined
        QSeries f = monomial_series(i, j, out_order * static_cast<int>(level));
        QSeries tf = hecke_on_series(f, k, level, out_order);
        auto coeffs = express_in_monomials(tf, k);
        if (!coeffs.empty()) table.entries[{i, j}] = std::move(coeffs);
    }
    return table;
}

}  // namespace hecke
