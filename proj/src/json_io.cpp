#include "hecke/json_io.hpp"

#include <sstream>

namespace hecke {

using nlohmann::json;

json rat_to_json(const Rat& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rat rat_from_json(const json& j) {
    Rat q(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
    q.canonicalize();
    return q;
}

json poly_to_json(const MultiPoly& p) {
    json vars = json::array();
    for (Var v : p.vars().vars()) vars.push_back(var_name(v));
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exps"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return json{{"vars", vars}, {"terms", terms}};
}

json ratfunc_to_json(const RatFunc& f) {
    return json{{"numerator", poly_to_json(f.num())}, {"denominator", poly_to_json(f.den())}};
}

json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(ratfunc_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"rows", rows}};
}

json table_to_json(const CoefficientTable& t) {
    json entries = json::array();
    for (const auto& [ij, row] : t.entries) {
        json coeffs = json::array();
        for (const auto& [kl, v] : row) {
            coeffs.push_back(json{{"k", kl.first},
                                  {"l", kl.second},
                                  {"num", v.get_num().get_str()},
                                  {"den", v.get_den().get_str()}});
        }
        entries.push_back(json{{"i", ij.first}, {"j", ij.second}, {"coeffs", coeffs}});
    }
    return json{{"level", t.level}, {"max_weight", t.max_weight}, {"entries", entries}};
}

CoefficientTable table_from_json(const json& j, unsigned level, int max_weight) {
    CoefficientTable t;
    t.level = level;
    t.max_weight = max_weight;
    for (const auto& entry : j.at("entries")) {
        std::map<std::pair<int, int>, Rat> row;
        for (const auto& c : entry.at("coeffs")) {
            Rat v(mpz_class(c.at("num").get<std::string>()),
                  mpz_class(c.at("den").get<std::string>()));
            v.canonicalize();
            row[{c.at("k").get<int>(), c.at("l").get<int>()}] = v;
        }
        t.entries[{entry.at("i").get<int>(), entry.at("j").get<int>()}] = std::move(row);
    }
    return t;
}

json qseries_to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const Rat& c : s.c)
        coeffs.push_back(json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return json{{"weight", s.weight}, {"coefficients", coeffs}};
}

std::string render_poly_text(const MultiPoly& p) { return p.str(); }

std::string render_matrix_text(const PolyMatrix& m) {
    // row-major, mirroring the usual printed layout
    std::vector<std::vector<std::string>> cells(m.dim());
    std::vector<std::size_t> widths(m.dim(), 0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            cells[i].push_back(m.at(i, j).str());
            widths[j] = std::max(widths[j], cells[i][j].size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            os << cells[i][j];
            os << std::string(widths[j] - cells[i][j].size() + 2, ' ');
        }
        os << "]\n";
    }
    return os.str();
}

std::string render_table_text(const CoefficientTable& t) {
    std::ostringstream os;
    for (const auto& [ij, row] : t.entries) {
        os << "T_" << t.level << "(a^" << ij.first << " b^" << ij.second << ") =";
        bool first = true;
        for (const auto& [kl, v] : row) {
            os << (first ? " " : " + ") << v.get_str() << " a^" << kl.first << " b^"
               << kl.second;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hecke
