#include "liewb/json_io.hpp"

#include "liewb/errors.hpp"

namespace liewb {

nlohmann::json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw DomainError("rational: expected an integer or a \"num/den\" string");
}

nlohmann::json to_json(const Partition& lam) {
    nlohmann::json a = nlohmann::json::array();
    for (int part : lam.parts()) a.push_back(part);
    return a;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("partition: expected an array of positive parts");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw DomainError("partition: parts must be integers");
        parts.push_back(e.get<int>());
    }
    return Partition(parts);
}

nlohmann::json to_json(const SymFunc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms())
        terms.push_back(nlohmann::json::array({to_json(lam), to_json(c)}));
    return nlohmann::json{{"basis", std::string(1, static_cast<char>(f.basis()))},
                          {"terms", std::move(terms)}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw DomainError("symmetric function: expected {\"basis\":…, \"terms\":…}");
    const std::string letter = j.at("basis").get<std::string>();
    if (letter.size() != 1)
        throw DomainError("symmetric function: basis must be one of p, m, h, e, s");
    SymFunc f = SymFunc::zero(basis_from_char(letter[0]));
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw DomainError("symmetric function: each term must be [partition, coefficient]");
        f.add_term(partition_from_json(t.at(0)), rational_from_json(t.at(1)));
    }
    return f;
}

nlohmann::json to_json(const GreenElement& x) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : x.coords) coords.push_back(to_json(c));
    return nlohmann::json{{"p", x.p}, {"coords", std::move(coords)}};
}

GreenElement green_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("coords"))
        throw DomainError("green element: expected {\"p\":…, \"coords\":…}");
    GreenElement x = green_zero(j.at("p").get<int>());
    const auto& coords = j.at("coords");
    if (!coords.is_array() || coords.size() != x.coords.size())
        throw DomainError("green element: coords must list exactly p entries (J_1..J_p)");
    for (size_t i = 0; i < x.coords.size(); ++i)
        x.coords[i] = rational_from_json(coords.at(i));
    return x;
}

nlohmann::json ghost_to_json(const GhostSolution& sol, const std::vector<int>& ns) {
    nlohmann::json bs = nlohmann::json::array(), ghosts = nlohmann::json::array();
    for (const auto& b : sol.b) bs.push_back(to_json(b));
    for (const auto& g : sol.ghosts) ghosts.push_back(to_json(g));
    nlohmann::json dims = nlohmann::json::array();
    for (int n : ns) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& b : sol.b) row.push_back(to_json(eval_dim(b, n)));
        dims.push_back(std::move(row));
    }
    nlohmann::json positive = nlohmann::json::array();
    for (const auto& b : sol.b) positive.push_back(is_schur_positive(b));
    return nlohmann::json{{"p", sol.p},          {"k", sol.k},       {"m", sol.m},
                          {"b", std::move(bs)},  {"ghosts", std::move(ghosts)},
                          {"dims", std::move(dims)}, {"positive", std::move(positive)}};
}

nlohmann::json to_json(const Report& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back(nlohmann::json{{"identity", c.identity},
                                        {"params", c.params},
                                        {"pass", c.pass},
                                        {"witness", c.witness}});
    return nlohmann::json{{"all_pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string report_to_csv(const Report& rep) {
    std::string out = "identity,params,pass,witness\n";
    for (const auto& c : rep.checks)
        out += csv_escape(c.identity) + "," + csv_escape(c.params) + "," +
               (c.pass ? "true" : "false") + "," + csv_escape(c.witness) + "\n";
    return out;
}

} // namespace liewb
