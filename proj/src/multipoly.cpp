#include "hecke/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hecke {

const char* var_name(Var v) {
    static const char* names[] = {"a", "b", "x", "e", "A", "B"};
    return names[static_cast<int>(v)];
}

std::optional<Var> var_from_name(char c) {
    switch (c) {
        case 'a': return Var::a;
        case 'b': return Var::b;
        case 'x': return Var::x;
        case 'e': return Var::e;
        case 'A': return Var::A;
        case 'B': return Var::B;
        default: return std::nullopt;
    }
}

VarSet::VarSet(std::initializer_list<Var> vs) : vars_(vs) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

VarSet::VarSet(const std::vector<Var>& vs) : vars_(vs) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

std::optional<std::size_t> VarSet::index_of(Var v) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v) return i;
    return std::nullopt;
}

bool GrevlexGreater::operator()(const Exps& u, const Exps& v) const {
    int du = 0, dv = 0;
    for (int e : u) du += e;
    for (int e : v) dv += e;
    if (du != dv) return du > dv;
    // grevlex tie-break: rightmost differing exponent, smaller wins
    for (std::size_t i = u.size(); i-- > 0;) {
        if (u[i] != v[i]) return u[i] < v[i];
    }
    return false;
}

MultiPoly::MultiPoly(VarSet vars, const Rat& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Exps(vars_.size(), 0), c);
}

MultiPoly MultiPoly::constant(const VarSet& vars, const Rat& c) {
    return MultiPoly(vars, c);
}

MultiPoly MultiPoly::variable(const VarSet& vars, Var v, int power) {
    auto idx = vars.index_of(v);
    if (!idx) throw std::invalid_argument("variable not in variable set");
    Exps e(vars.size(), 0);
    e[*idx] = power;
    return term(vars, e, Rat(1));
}

MultiPoly MultiPoly::term(const VarSet& vars, const Exps& e, const Rat& c) {
    MultiPoly p(vars);
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("not a constant polynomial");
    return terms_.begin()->second;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

const Exps& MultiPoly::leading_exps() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

Rat MultiPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree_in(Var v) const {
    auto idx = vars_.index_of(v);
    if (!idx) return terms_.empty() ? -1 : 0;
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("mismatched variable sets");
}

void MultiPoly::add_term(const Exps& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [eu, cu] : terms_) {
        for (const auto& [ev, cv] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = eu[i] + ev[i];
            r.add_term(e, cu * cv);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::operator/(const Rat& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    return *this * (Rat(1) / c);
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r = constant(vars_, Rat(1));
    MultiPoly base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::lifted(const VarSet& bigger) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto idx = bigger.index_of(vars_[i]);
        if (!idx) throw std::invalid_argument("lift target is not a superset");
        pos[i] = *idx;
    }
    MultiPoly r((VarSet(bigger)));
    for (const auto& [e, c] : terms_) {
        Exps ne(bigger.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::restricted(const VarSet& smaller) const {
    std::vector<std::optional<std::size_t>> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) pos[i] = smaller.index_of(vars_[i]);
    MultiPoly r((VarSet(smaller)));
    for (const auto& [e, c] : terms_) {
        Exps ne(smaller.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (pos[i]) {
                ne[*pos[i]] = e[i];
            } else if (e[i] != 0) {
                throw std::invalid_argument("restriction drops a used variable");
            }
        }
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        if (ac != 1 || !has_var) {
            os << ac.get_str();
            if (has_var) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << var_name(vars_[i]);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// fixture parser

namespace {

struct Parser {
    const std::string& s;
    const VarSet& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + msg);
    }

    MultiPoly parse_expr() {
        MultiPoly r = parse_term_signed();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = r + parse_term();
            } else if (c == '-') {
                ++pos;
                r = r - parse_term();
            } else {
                return r;
            }
        }
    }

    MultiPoly parse_term_signed() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return -parse_term();
        }
        if (c == '+') ++pos;
        return parse_term();
    }

    // product of factors, with '/' dividing by a constant factor
    MultiPoly parse_term() {
        MultiPoly r = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = r * parse_factor();
            } else if (c == '/') {
                ++pos;
                MultiPoly d = parse_factor();
                if (!d.is_constant()) fail("division only by constants");
                r = r / d.constant_value();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
                       var_from_name(c)) {
                r = r * parse_factor();  // juxtaposition
            } else {
                return r;
            }
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            unsigned n = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                n = 10 * n + static_cast<unsigned>(s[pos++] - '0');
            return base.pow(n);
        }
        return base;
    }

    MultiPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly r = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                num += s[pos++];
            return MultiPoly::constant(vars, Rat(mpz_class(num)));
        }
        if (auto v = var_from_name(c)) {
            ++pos;
            return MultiPoly::variable(vars, *v);
        }
        fail("unexpected character");
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, const VarSet& vars) {
    Parser p{text, vars};
    MultiPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

int var_weight(Var v) {
    static const int w[] = {4, 6, 2, 2, -4, -6};
    return w[static_cast<int>(v)];
}

std::optional<int> weight_of(const MultiPoly& p) {
    if (p.is_zero()) return 0;
    std::optional<int> wt;
    for (const auto& [e, c] : p.terms()) {
        int w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * var_weight(p.vars()[i]);
        if (!wt) {
            wt = w;
        } else if (*wt != w) {
            return std::nullopt;
        }
    }
    return wt;
}

}  // namespace hecke
