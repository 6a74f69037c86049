#pragma once

#include <string>

#include "json.hpp"

#include "hecke/genfun.hpp"
#include "hecke/qexp.hpp"

namespace hecke {

inline constexpr const char* kArtifactVersion = "1.0";

// Big integers are serialized as decimal strings so downstream
// consumers never hit 64-bit overflow.
nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

// {"vars": [...], "terms": [{"exps": [...], "num": "...", "den": "..."}]}
// terms sorted by the fixed monomial order
nlohmann::json poly_to_json(const MultiPoly& p);
nlohmann::json ratfunc_to_json(const RatFunc& f);
nlohmann::json matrix_to_json(const PolyMatrix& m);
nlohmann::json table_to_json(const CoefficientTable& t);
CoefficientTable table_from_json(const nlohmann::json& j, unsigned level, int max_weight);
nlohmann::json qseries_to_json(const QSeries& s);

std::string render_poly_text(const MultiPoly& p);
std::string render_matrix_text(const PolyMatrix& m);
std::string render_table_text(const CoefficientTable& t);

}  // namespace hecke
