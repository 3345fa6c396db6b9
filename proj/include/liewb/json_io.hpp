#pragma once

#include <json.hpp>
#include <string>

#include "liewb/char_backend.hpp"
#include "liewb/modular.hpp"
#include "liewb/partition.hpp"
#include "liewb/rational.hpp"
#include "liewb/report.hpp"
#include "liewb/series.hpp"
#include "liewb/symfunc.hpp"

namespace liewb {

// Exact wire forms. Rationals travel as strings ("5", "-7/3") so that no
// consumer is tempted to round them; integers are accepted on input.
nlohmann::json to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& lam);
Partition partition_from_json(const nlohmann::json& j);

// {"basis": "p|m|h|e|s", "terms": [[[parts...], "num/den"], ...]} with terms
// in canonical partition order.
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

// {"p": int, "coords": ["num/den", ...]} indexed by block size 1..p.
nlohmann::json to_json(const GreenElement& x);
GreenElement green_from_json(const nlohmann::json& j);

// {"D": int, "coeffs": [element encodings indexed 0..D]}.
template <typename Elem>
nlohmann::json series_to_json(const TruncSeries<Elem>& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int r = 0; r <= f.truncation(); ++r) coeffs.push_back(to_json(f.coeff(r)));
    return nlohmann::json{{"D", f.truncation()}, {"coeffs", std::move(coeffs)}};
}

// {"p","k","m","b","ghosts","dims","positive"}; "dims" holds one row per
// requested evaluation dimension n, listing dim b_i for i = 0..m.
nlohmann::json ghost_to_json(const GhostSolution& sol, const std::vector<int>& ns);

nlohmann::json to_json(const Report& rep);
std::string report_to_csv(const Report& rep);

// RFC-4180-style quoting for a single CSV field.
std::string csv_escape(const std::string& s);

} // namespace liewb
