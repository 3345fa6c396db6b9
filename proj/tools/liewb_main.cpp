// liewb — exact workbench for Lie powers, Adams operations, Lie resolvents
// and Witt/ghost decompositions over two carriers: the ring of symmetric
// functions and the rational Green ring of a cyclic group of prime order.
//
// Exit codes: 0 success / all checks pass; 1 verification or integrality
// failure; 2 usage or domain error; 3 computation refused by the size budget.

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liewb/json_io.hpp"
#include "liewb/numtheory.hpp"

using namespace liewb;

namespace {

// ---------------------------------------------------------------- output ---

std::string sym_str(const SymFunc& f) {
    if (f.terms().empty()) return "0";
    const char letter = static_cast<char>(f.basis());
    std::string out;
    for (const auto& [lam, c] : f.terms()) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string coeff = mag.str() == "1" ? "" : mag.str() + "*";
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += coeff + letter + lam.str();
    }
    return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// --------------------------------------------------------------- inputs ----

SymFunc load_character(const std::string& input) {
    if (input.empty())
        return SymFunc::basis_element(Basis::PowerSum, Partition::single(1));
    std::string text = input;
    if (input[0] == '@') {
        std::ifstream in(input.substr(1));
        if (!in) throw DomainError("cannot open input file " + input.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return symfunc_from_json(nlohmann::json::parse(text));
}

long long budget_from_env() {
    if (const char* s = std::getenv("LIEWB_BUDGET")) {
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (errno || end == s || *end != '\0' || v < 1)
            throw DomainError("LIEWB_BUDGET must be a positive integer");
        return v;
    }
    return kDefaultTensorBudget;
}

// Recursive-descent grammar for Green-ring expressions:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := 'J' integer | integer | '(' expr ')'
class ExprParser {
  public:
    ExprParser(std::string text, int p) : s_(std::move(text)), p_(p) {}

    GreenElement parse() {
        GreenElement v = expr();
        skip();
        if (pos_ != s_.size())
            throw DomainError("expression: unexpected input at '" + s_.substr(pos_) + "'");
        return v;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    int integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw DomainError("expression: expected an integer");
        if (pos_ - start > 9) throw DomainError("expression: integer too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    GreenElement atom() {
        skip();
        if (pos_ >= s_.size()) throw DomainError("expression: unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            GreenElement v = expr();
            if (!peek(')')) throw DomainError("expression: missing ')'");
            ++pos_;
            return v;
        }
        if (c == 'J') {
            ++pos_;
            return green_jordan(p_, integer());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return green_one(p_) * Rational(integer());
        throw DomainError(std::string("expression: expected 'J<b>', an integer, or '(' at '") +
                          c + "'");
    }
    GreenElement factor() {
        GreenElement v = atom();
        if (peek('^')) {
            ++pos_;
            v = green_pow(v, integer());
        }
        return v;
    }
    GreenElement term() {
        GreenElement v = factor();
        while (peek('*')) {
            ++pos_;
            v = v * factor();
        }
        return v;
    }
    GreenElement expr() {
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        } else if (peek('+')) {
            ++pos_;
        }
        GreenElement acc = term();
        if (neg) acc *= Rational(-1);
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    std::string s_;
    size_t pos_ = 0;
    int p_;
};

// ------------------------------------------------------------ commands -----

struct Opts {
    std::string format = "table";
    std::string basis = "p";  // display basis for character output
    std::string input;        // sym --input (inline JSON or @file)
    std::string module_str;  // modular/explore --module
    std::string expr_str;    // modular/explore --expr
    std::string suite;
    std::vector<int> ns;  // witt --n, repeatable
    int r = 1, p = 2, i = 0, k = 1, m = 1, D = 8, n = 0, a = 0, max_r = 8, max_m = 3;
    uint64_t seed = 20260825;
};

void check_format(const std::string& f) {
    if (f != "json" && f != "csv" && f != "table")
        throw DomainError("--format must be json, csv, or table");
}

SymFunc display_basis(const SymFunc& f, const Opts& o) {
    if (o.basis.size() != 1) throw DomainError("--basis must be one of p, m, h, e, s");
    return to_basis(f, basis_from_char(o.basis[0]));
}

int emit_symfunc(const SymFunc& raw, const Opts& o) {
    check_format(o.format);
    const SymFunc out = display_basis(raw, o);
    if (o.format == "json") {
        if (o.n > 0) {
            nlohmann::json j{{"character", to_json(out)},
                             {"n", o.n},
                             {"dim", to_json(eval_dim(out, o.n))}};
            std::cout << dump(j);
        } else {
            std::cout << dump(to_json(out));
        }
    } else if (o.format == "csv") {
        std::cout << "partition,coefficient\n";
        for (const auto& [lam, c] : out.terms())
            std::cout << csv_escape(lam.str()) << "," << csv_escape(c.str()) << "\n";
    } else {
        std::cout << sym_str(out) << "\n";
        if (o.n > 0) std::cout << "dim(n=" << o.n << ") = " << eval_dim(out, o.n).str() << "\n";
    }
    return 0;
}

int cmd_sym_lie(const Opts& o) {
    return emit_symfunc(lie_char(load_character(o.input), o.r), o);
}

int cmd_sym_restricted(const Opts& o) {
    return emit_symfunc(restricted_lie_char(load_character(o.input), o.p, o.i, o.k), o);
}

int cmd_sym_chi(const Opts& o) { return emit_symfunc(chi(load_character(o.input), o.r), o); }

int cmd_witt(const Opts& o) {
    check_format(o.format);
    std::vector<int> ns = o.ns.empty() ? std::vector<int>{2} : o.ns;
    for (int n : ns)
        if (n < 1) throw DomainError("witt: evaluation dimension must be >= 1");
    GhostSolution sol =
        ghost_solve(SymFunc::basis_element(Basis::PowerSum, Partition::single(1)), o.p, o.k,
                    o.m);
    bool all_positive = true;
    for (const auto& b : sol.b) all_positive = all_positive && is_schur_positive(b);
    if (o.format == "json") {
        std::cout << dump(ghost_to_json(sol, ns));
    } else if (o.format == "csv") {
        std::cout << "i,degree";
        for (int n : ns) std::cout << ",dim_n" << n;
        std::cout << ",positive\n";
        for (int i = 0; i <= sol.m; ++i) {
            const SymFunc& b = sol.b[static_cast<size_t>(i)];
            std::cout << i << "," << ipow(sol.p, i) * sol.k;
            for (int n : ns) std::cout << "," << eval_dim(b, n).str();
            std::cout << "," << (is_schur_positive(b) ? "true" : "false") << "\n";
        }
    } else {
        for (int i = 0; i <= sol.m; ++i) {
            const SymFunc& b = sol.b[static_cast<size_t>(i)];
            std::cout << "b_" << ipow(sol.p, i) * sol.k << " = "
                      << sym_str(display_basis(b, o)) << "\n";
            for (int n : ns)
                std::cout << "  dim(n=" << n << ") = " << eval_dim(b, n).str() << "\n";
            std::cout << "  schur-positive: " << (is_schur_positive(b) ? "yes" : "no") << "\n";
        }
    }
    return all_positive ? 0 : 1;
}

GreenElement modular_element(const Opts& o) {
    if (!o.module_str.empty() && !o.expr_str.empty())
        throw DomainError("give either --module or --expr, not both");
    const std::string& text = !o.module_str.empty() ? o.module_str : o.expr_str;
    if (text.empty()) throw DomainError("give --module J<b> or --expr '<expression>'");
    return ExprParser(text, o.p).parse();
}

int emit_green(const GreenElement& x, const Opts& o) {
    check_format(o.format);
    if (o.format == "json") {
        std::cout << dump(to_json(x));
    } else if (o.format == "csv") {
        std::cout << "block,coefficient\n";
        for (int b = 1; b <= x.p; ++b)
            std::cout << "J" << b << "," << csv_escape(x.coord(b).str()) << "\n";
    } else {
        std::cout << x.str() << "\n";
    }
    return 0;
}

int cmd_modular(const Opts& o, const std::string& op) {
    GreenElement x = modular_element(o);
    if (op == "decompose") return emit_green(x, o);
    GreenRing ring(o.p, budget_from_env());
    if (op == "psi") return emit_green(ring.adams(x, o.r), o);
    if (op == "phi") return emit_green(ring.resolvent(x, o.r), o);
    return emit_green(ring.rho(x, o.r), o);
}

int cmd_explore_rho_powers(const Opts& o) {
    check_format(o.format);
    GreenElement x = modular_element(o);
    GreenRing ring(o.p, budget_from_env());
    struct Row {
        int m;
        long long r;
        GreenElement value;
    };
    std::vector<Row> rows;
    bool truncated = false;
    for (int m = 1; m <= o.max_m; ++m) {
        long long r = ipow(o.p, m);
        if (r > (1LL << 30)) {
            truncated = true;
            break;
        }
        try {
            rows.push_back(Row{m, r, ring.rho(x, static_cast<int>(r))});
        } catch (const BudgetExceeded&) {
            truncated = true;
            break;
        }
    }
    if (o.format == "json") {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& row : rows)
            jrows.push_back(nlohmann::json{
                {"m", row.m}, {"r", row.r}, {"value", to_json(row.value)}});
        std::cout << dump(nlohmann::json{{"p", o.p},
                                         {"rows", std::move(jrows)},
                                         {"truncated_by_budget", truncated}});
    } else if (o.format == "csv") {
        std::cout << "m,r,value\n";
        for (const auto& row : rows)
            std::cout << row.m << "," << row.r << "," << csv_escape(row.value.str()) << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << "rho^" << row.r << " = " << row.value.str() << "\n";
        if (truncated) std::cout << "(stopped: next index exceeds the size budget)\n";
    }
    return 0;
}

int cmd_verify(const Opts& o) {
    check_format(o.format);
    static const std::set<std::string> kSuites = {"char0",  "factorisation", "witt",
                                                  "decomposition", "ptypical", "green",
                                                  "all"};
    if (!kSuites.count(o.suite))
        throw DomainError(
            "--suite must be one of char0, factorisation, witt, decomposition, ptypical, "
            "green, all");

    const bool want_char = o.suite == "char0" || o.suite == "factorisation" ||
                           o.suite == "witt" || o.suite == "decomposition" ||
                           o.suite == "ptypical" || o.suite == "all";
    const bool want_green = o.suite != "char0";

    Report merged;
    if (want_char) {
        VerifyCharConfig cc;
        cc.p = o.p;
        cc.k = o.k;
        cc.m = o.m;
        cc.D = o.D;
        if (o.n > 0) cc.n = o.n;
        cc.seed = o.seed;
        merged.merge(verify_char_identities(cc));
    }
    if (want_green) {
        VerifyGreenConfig gc;
        gc.p = o.p;
        gc.k = o.k;
        gc.m = o.m;
        gc.D = o.D;
        gc.max_r = o.max_r;
        gc.a_max = o.a;
        gc.seed = o.seed;
        gc.tensor_budget = budget_from_env();
        merged.merge(verify_green_identities(gc));
    }

    Report rep;
    if (o.suite == "char0" || o.suite == "green" || o.suite == "all") {
        rep = std::move(merged);
    } else {
        static const std::map<std::string, std::set<std::string>> kFilters = {
            {"factorisation",
             {"resolvent-factorisation/char", "adams-composition/char",
              "resolvent-adams-relation/char", "resolvent-factorisation/green",
              "resolvent-is-mobius-adams/green", "adams-composition/green"}},
            {"witt",
             {"witt-dimension", "ghost-integrality", "ghost-schur-positivity",
              "witt-ghost-equation/char", "witt-dimension/green", "witt-ghost-equation/green",
              "B-modules-genuine", "ghost-dimension-match"}},
            {"decomposition",
             {"lie-decomposition/char", "restricted-decomposition/char",
              "restricted-decomposition/green", "restricted-dimension-match",
              "B-modules-genuine"}},
            {"ptypical",
             {"inverse-pair-LS/char", "inverse-pair-SL/char", "pbw-geometric-series/char",
              "p-typicality", "rho-series-match", "rho-degree-one", "rho-vanishing",
              "rho-prime-power-vanishing"}},
        };
        const auto& keep = kFilters.at(o.suite);
        for (const auto& c : merged.checks)
            if (keep.count(c.identity)) rep.checks.push_back(c);
    }
    if (rep.checks.empty()) throw InternalError("verify: suite selected no checks");

    if (o.format == "json") {
        nlohmann::json j = to_json(rep);
        j["suite"] = o.suite;
        j["seed"] = o.seed;
        std::cout << dump(j);
    } else if (o.format == "csv") {
        std::cout << report_to_csv(rep);
    } else {
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "pass  " : "FAIL  ") << c.identity << "  " << c.params
                      << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "SOME CHECKS FAILED")
                  << " (suite=" << o.suite << " seed=" << o.seed << ")\n";
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{
        "exact calculus of Lie powers, Adams operations and Lie resolvents\n"
        "over symmetric functions and the rational Green ring of C_p"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: json, csv, or table")
            ->default_str("table");
    };

    CLI::App* sym = app.add_subcommand("sym", "symmetric-function characters");
    sym->require_subcommand(1);
    CLI::App* sym_lie = sym->add_subcommand("lie", "character of the degree-r Lie power");
    sym_lie->add_option("--r", o.r, "Lie power degree")->required();
    CLI::App* sym_res =
        sym->add_subcommand("restricted", "character of the restricted Lie power of degree p^i*k");
    sym_res->add_option("--p", o.p, "prime")->required();
    sym_res->add_option("--i", o.i, "p-power height")->required();
    sym_res->add_option("--k", o.k, "coprime part of the degree")->required();
    CLI::App* sym_chi = sym->add_subcommand("chi", "Adams operation on a character");
    sym_chi->add_option("--r", o.r, "Adams index")->required();
    for (CLI::App* cmd : {sym_lie, sym_res, sym_chi}) {
        cmd->add_option("--input", o.input,
                        "input character as JSON (inline or @file); default is the natural "
                        "character p[1]");
        cmd->add_option("--n", o.n, "also report the dimension at this variable count");
        cmd->add_option("--basis", o.basis, "display basis: p, m, h, e, or s (default p)");
        add_format(cmd);
    }

    CLI::App* witt = app.add_subcommand(
        "witt", "solve the ghost equations for the Lie-power decomposition factors");
    witt->add_option("--p", o.p, "prime")->required();
    witt->add_option("--k", o.k, "coprime part of the degree")->required();
    witt->add_option("--m", o.m, "depth: solves for degrees k, pk, ..., p^m*k")->required();
    witt->add_option("--n", o.ns, "evaluation dimension(s), repeatable (default 2)");
    witt->add_option("--basis", o.basis, "display basis for table output (default p)");
    add_format(witt);

    CLI::App* modular = app.add_subcommand("modular", "operations in the Green ring of C_p");
    modular->require_subcommand(1);
    CLI::App* md = modular->add_subcommand("decompose", "evaluate an expression into J-blocks");
    CLI::App* mp = modular->add_subcommand("psi", "Adams operation");
    CLI::App* mf = modular->add_subcommand("phi", "Lie resolvent");
    CLI::App* mr = modular->add_subcommand("rho", "averaged resolvent-of-Adams operation");
    for (CLI::App* cmd : {md, mp, mf, mr}) {
        cmd->add_option("--p", o.p, "prime order of the group")->required();
        cmd->add_option("--module", o.module_str, "single module, e.g. J2");
        cmd->add_option("--expr", o.expr_str,
                        "expression over J-blocks, e.g. '(J2 + J1)*J2 - 2*J1'");
        add_format(cmd);
    }
    for (CLI::App* cmd : {mp, mf, mr})
        cmd->add_option("--r", o.r, "operation index")->required();

    CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("--suite", o.suite,
                       "char0 | factorisation | witt | decomposition | ptypical | green | all")
        ->required();
    verify->add_option("--p", o.p, "prime (default 2)");
    verify->add_option("--k", o.k, "coprime part of the degree (default 3)")
        ->default_val(3);
    verify->add_option("--m", o.m, "decomposition depth (default 1)");
    verify->add_option("--D", o.D, "series truncation (default 8)");
    verify->add_option("--n", o.n, "variable count for character dimension checks");
    verify->add_option("--a", o.a, "largest Jordan block exercised (default: all up to p)");
    verify->add_option("--max-r", o.max_r, "operation index range (default 8)");
    verify->add_option("--seed", o.seed, "seed for randomized checks");
    add_format(verify);

    CLI::App* explore = app.add_subcommand("explore", "open-ended experiments");
    CLI::App* er = explore->add_subcommand(
        "rho-powers", "values of rho at p-power indices on a module expression");
    er->add_option("--p", o.p, "prime order of the group")->required();
    er->add_option("--module", o.module_str, "single module, e.g. J2");
    er->add_option("--expr", o.expr_str, "expression over J-blocks");
    er->add_option("--max-m", o.max_m, "largest exponent m for indices p^m (default 3)");
    add_format(er);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sym_lie->parsed()) return cmd_sym_lie(o);
        if (sym_res->parsed()) return cmd_sym_restricted(o);
        if (sym_chi->parsed()) return cmd_sym_chi(o);
        if (witt->parsed()) return cmd_witt(o);
        if (md->parsed()) return cmd_modular(o, "decompose");
        if (mp->parsed()) return cmd_modular(o, "psi");
        if (mf->parsed()) return cmd_modular(o, "phi");
        if (mr->parsed()) return cmd_modular(o, "rho");
        if (er->parsed()) return cmd_explore_rho_powers(o);
        if (verify->parsed()) return cmd_verify(o);
        throw InternalError("no subcommand dispatched");
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const IntegralityError& e) {
        std::cerr << "integrality: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected: " << e.what() << "\n";
        return 1;
    }
}
