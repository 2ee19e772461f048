#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "conifold/characters.hpp"
#include "conifold/laurent.hpp"
#include "conifold/partition_functions.hpp"
#include "conifold/series.hpp"

namespace conifold {

// JSON forms, deterministic end to end:
//
//   series:   { "context": "4d"|"6d", "order": N | "box": [M, L],
//               "terms": [ { "exp": [a,b,c] | [m,l,w], "coef": "<decimal>" } ] }
//             with terms in the canonical monomial order;
//   Laurent:  { "s_min": w0, "coeffs": ["c0", "c1", ...] } dense in the
//             s-exponent (zero polynomial: s_min 0, empty coeffs);
//   SL(2):    { "<d>": mult };
//   tables:   rows with columns l, m, s_min, coeffs, P_lm, sl2;
//   reports:  { "identity", "box", "status", "discrepancies": [...] }.
//
// Coefficients travel as decimal strings; exponents and indices as numbers.

nlohmann::json series_to_json(const Series4D& x);
nlohmann::json series_to_json(const Series6D& x);
Series4D series4d_from_json(const nlohmann::json& j);
Series6D series6d_from_json(const nlohmann::json& j);

nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json sl2_to_json(const SL2Decomp& d);

nlohmann::json table_to_json(const InvariantTable& t);
std::string table_to_csv(const InvariantTable& t);
std::string table_to_text(const InvariantTable& t);

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

} // namespace conifold
