#include "liewb/char_backend.hpp"

#include <algorithm>

#include "liewb/rng.hpp"

namespace liewb {

namespace {

void check_degree_cap(const SymFunc& f, long long factor, int cap, const char* who) {
    long long deg = static_cast<long long>(f.degree()) * factor;
    if (deg > cap)
        throw BudgetExceeded(std::string(who) + ": requested total degree " +
                             std::to_string(deg) + " exceeds cap " + std::to_string(cap));
}

// First differing power-sum term, rendered for a failure witness.
std::string mismatch_witness(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = to_basis(a, Basis::PowerSum), pb = to_basis(b, Basis::PowerSum);
    auto ia = pa.terms().begin();
    auto ib = pb.terms().begin();
    PartitionCanonicalLess before;
    while (ia != pa.terms().end() || ib != pb.terms().end()) {
        if (ib == pb.terms().end() ||
            (ia != pa.terms().end() && before(ia->first, ib->first))) {
            return "at p" + ia->first.str() + ": " + ia->second.str() + " vs 0";
        }
        if (ia == pa.terms().end() || before(ib->first, ia->first)) {
            return "at p" + ib->first.str() + ": 0 vs " + ib->second.str();
        }
        if (ia->second != ib->second)
            return "at p" + ia->first.str() + ": " + ia->second.str() + " vs " +
                   ib->second.str();
        ++ia, ++ib;
    }
    return "";
}

std::string series_mismatch_witness(const TruncSeries<SymFunc>& a,
                                    const TruncSeries<SymFunc>& b) {
    for (int r = 0; r <= std::min(a.truncation(), b.truncation()); ++r)
        if (!(a.coeff(r) == b.coeff(r)))
            return "t^" + std::to_string(r) + " " + mismatch_witness(a.coeff(r), b.coeff(r));
    return "";
}

} // namespace

SymFunc lie_char(const SymFunc& f, int r, int degree_cap) {
    if (r < 1) throw DomainError("lie_char: degree must be >= 1");
    check_degree_cap(f, r, degree_cap, "lie_char");
    SymFunc fp = to_basis(f, Basis::PowerSum);
    SymFunc acc(Basis::PowerSum);
    for (int d : divisors(r)) {
        int mu = mobius(d);
        if (!mu) continue;
        acc += chi(sym_pow(fp, r / d), d) * Rational(mu);
    }
    acc *= Rational(1, r);
    if (!has_integral_monomial_coeffs(acc))
        throw IntegralityError("lie_char: non-integral output; input was not a character");
    return acc;
}

SymFunc restricted_lie_char(const SymFunc& f, int p, int i, int k, int degree_cap) {
    if (!is_prime(p)) throw DomainError("restricted_lie_char: p must be prime");
    if (i < 0) throw DomainError("restricted_lie_char: negative height");
    if (k < 1 || k % p == 0)
        throw DomainError("restricted_lie_char: k must be positive and coprime to p");
    check_degree_cap(f, ipow(p, i) * k, degree_cap, "restricted_lie_char");
    SymFunc acc(Basis::PowerSum);
    for (int s = 0; s <= i; ++s) {
        int j = i - s;
        acc += chi(lie_char(f, static_cast<int>(ipow(p, j)) * k, degree_cap),
                   static_cast<int>(ipow(p, s)));
    }
    return acc;
}

GhostSolution ghost_solve(const SymFunc& f, int p, int k, int m, int degree_cap) {
    if (!is_prime(p)) throw DomainError("ghost_solve: p must be prime");
    if (k < 1 || k % p == 0) throw DomainError("ghost_solve: k must be positive and coprime to p");
    if (m < 0) throw DomainError("ghost_solve: negative depth");
    const SymFunc fm = to_basis(f, Basis::Monomial);
    for (const auto& [lam, c] : fm.terms())
        if (!c.is_nonneg_integer())
            throw DomainError("ghost_solve: input is not an actual character (term at m" +
                              lam.str() + " is " + c.str() + ")");
    check_degree_cap(f, ipow(p, m) * k, degree_cap, "ghost_solve");

    GhostSolution sol;
    sol.p = p, sol.k = k, sol.m = m;
    SymFunc fp = to_basis(f, Basis::PowerSum);
    for (int i = 0; i <= m; ++i)
        sol.ghosts.push_back(
            lie_char(sym_pow(fp, static_cast<int>(ipow(p, i))), k, degree_cap));
    sol.b.push_back(sol.ghosts[0]);
    for (int i = 1; i <= m; ++i) {
        SymFunc acc = sol.ghosts[i];
        for (int j = 0; j < i; ++j)
            acc -= Rational(ipow(p, j)) * sym_pow(sol.b[j], static_cast<int>(ipow(p, i - j)));
        acc *= Rational(1, ipow(p, i));
        if (!has_integral_monomial_coeffs(acc))
            throw IntegralityError("ghost_solve: component b_" + std::to_string(i) +
                                   " is not integral");
        sol.b.push_back(acc);
    }
    return sol;
}

ComponentFamily<SymFunc> adams_char_family() {
    return [](int r, const SymFunc& x) { return chi(x, r); };
}

ComponentFamily<SymFunc> resolvent_char_family() {
    return [](int r, const SymFunc& x) {
        int mu = mobius(r);
        if (!mu) return SymFunc::zero(Basis::PowerSum);
        return chi(x, r) * Rational(mu);
    };
}

TruncSeries<SymFunc> char_series_zero(int D) {
    return TruncSeries<SymFunc>(D, SymFunc::zero(Basis::PowerSum));
}

TruncSeries<SymFunc> char_series(int D, const std::vector<SymFunc>& coeffs) {
    TruncSeries<SymFunc> s = char_series_zero(D);
    if (static_cast<int>(coeffs.size()) != D + 1)
        throw DomainError("char_series: need exactly D+1 coefficients");
    for (int r = 0; r <= D; ++r) s.set_coeff(r, to_basis(coeffs[r], Basis::PowerSum));
    return s;
}

namespace {

SymFunc natural_character() {
    return SymFunc::basis_element(Basis::PowerSum, Partition::single(1));
}

// Random genuine character: small non-negative integer combination of monomial
// functions.
SymFunc random_character(Rng& rng, int max_degree) {
    SymFunc f(Basis::Monomial);
    int nterms = rng.uniform(1, 3);
    for (int t = 0; t < nterms; ++t) {
        int w = rng.uniform(1, max_degree);
        auto parts = partitions_of(w);
        const Partition& lam = parts[static_cast<size_t>(rng.uniform(0, static_cast<int>(parts.size()) - 1))];
        f.add_term(lam, Rational(rng.uniform(1, 3)));
    }
    return f;
}

// Random virtual element for series coefficients: small rational combination of
// power sums of low degree.
SymFunc random_virtual(Rng& rng, int max_degree) {
    SymFunc f(Basis::PowerSum);
    int nterms = rng.uniform(1, 2);
    for (int t = 0; t < nterms; ++t) {
        int w = rng.uniform(1, max_degree);
        auto parts = partitions_of(w);
        const Partition& lam = parts[static_cast<size_t>(rng.uniform(0, static_cast<int>(parts.size()) - 1))];
        int c = 0;
        while (c == 0) c = rng.uniform(-3, 3);
        f.add_term(lam, Rational(c));
    }
    return f;
}

TruncSeries<SymFunc> random_t_series(Rng& rng, int D, int max_degree) {
    TruncSeries<SymFunc> s = char_series_zero(D);
    for (int r = 1; r <= D; ++r) s.set_coeff(r, random_virtual(rng, max_degree));
    return s;
}

} // namespace

Report verify_char_identities(const VerifyCharConfig& cfg) {
    Report rep;
    Rng rng(cfg.seed);
    const SymFunc nat = natural_character();

    // Newton's identity through the series layer: log sum h_r t^r has
    // coefficients p_r / r.
    {
        std::vector<SymFunc> hs;
        for (int r = 0; r <= cfg.D; ++r)
            hs.push_back(r == 0 ? SymFunc::one() : SymFunc::basis_element(
                                                       Basis::Homogeneous, Partition::single(r)));
        TruncSeries<SymFunc> H = char_series(cfg.D, hs);
        TruncSeries<SymFunc> L = series_log(H);
        bool ok = true;
        std::string witness;
        for (int r = 1; r <= cfg.D && ok; ++r) {
            SymFunc expect =
                SymFunc::basis_element(Basis::PowerSum, Partition::single(r), Rational(1, r));
            if (!(L.coeff(r) == expect)) {
                ok = false;
                witness = "t^" + std::to_string(r) + " " + mismatch_witness(L.coeff(r), expect);
            }
        }
        rep.add("log-h-series", "D=" + std::to_string(cfg.D), ok, witness);
    }

    // Lie character of the natural module against the direct Moebius formula
    // (1/r) sum mobius(d) p_d^{r/d}, plus the Witt dimension formula.
    {
        bool ok = true;
        std::string witness;
        for (int r = 1; r <= 10 && ok; ++r) {
            SymFunc direct(Basis::PowerSum);
            for (int d : divisors(r)) {
                int mu = mobius(d);
                if (!mu) continue;
                std::vector<int> parts(static_cast<size_t>(r / d), d);
                direct.add_term(Partition(std::move(parts)), Rational(mu, r));
            }
            if (!(lie_char(nat, r, cfg.degree_cap) == direct)) {
                ok = false;
                witness = "r=" + std::to_string(r);
            }
        }
        rep.add("natural-lie-character", "r<=10", ok, witness);

        ok = true;
        witness.clear();
        for (int r = 1; r <= 10 && ok; ++r) {
            for (int n = 1; n <= 4 && ok; ++n) {
                Rational witt(0);
                for (int d : divisors(r))
                    witt += Rational(mobius(d)) * Rational::pow(Rational(n), r / d);
                witt *= Rational(1, r);
                Rational got = eval_dim(lie_char(nat, r, cfg.degree_cap), n);
                if (got != witt) {
                    ok = false;
                    witness = "r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " +
                              got.str() + " vs " + witt.str();
                }
            }
        }
        rep.add("witt-dimension", "r<=10 n<=4", ok, witness);
    }

    // Ghost solver: integrality, Schur positivity, the ghost equations
    // themselves, and the two decomposition identities they induce.
    {
        std::string params = "p=" + std::to_string(cfg.p) + " k=" + std::to_string(cfg.k) +
                             " m=" + std::to_string(cfg.m);
        try {
            GhostSolution sol = ghost_solve(nat, cfg.p, cfg.k, cfg.m, cfg.degree_cap);
            rep.add("ghost-integrality", params, true);

            bool ok = true;
            std::string witness;
            for (int i = 0; i <= cfg.m && ok; ++i) {
                if (auto bad = schur_negativity_witness(sol.b[static_cast<size_t>(i)])) {
                    ok = false;
                    witness = "b_" + std::to_string(i) + " at s" + bad->first.str() + ": " +
                              bad->second.str();
                }
            }
            rep.add("ghost-schur-positivity", params, ok, witness);

            ok = true;
            witness.clear();
            for (int i = 0; i <= cfg.m && ok; ++i) {
                SymFunc lhs(Basis::PowerSum);
                for (int j = 0; j <= i; ++j)
                    lhs += Rational(ipow(cfg.p, j)) *
                           sym_pow(sol.b[static_cast<size_t>(j)],
                                   static_cast<int>(ipow(cfg.p, i - j)));
                if (!(lhs == sol.ghosts[static_cast<size_t>(i)])) {
                    ok = false;
                    witness = "height " + std::to_string(i) + " " +
                              mismatch_witness(lhs, sol.ghosts[static_cast<size_t>(i)]);
                }
            }
            rep.add("witt-ghost-equation/char", params, ok, witness);

            int top_degree = static_cast<int>(ipow(cfg.p, cfg.m)) * cfg.k;
            SymFunc whole = lie_char(nat, top_degree, cfg.degree_cap);
            SymFunc split(Basis::PowerSum);
            for (int i = 0; i <= cfg.m; ++i)
                split += lie_char(sol.b[static_cast<size_t>(cfg.m - i)],
                                  static_cast<int>(ipow(cfg.p, i)), cfg.degree_cap);
            rep.add("lie-decomposition/char", params, whole == split,
                    whole == split ? "" : mismatch_witness(whole, split));

            SymFunc rwhole = restricted_lie_char(nat, cfg.p, cfg.m, cfg.k, cfg.degree_cap);
            SymFunc rsplit(Basis::PowerSum);
            for (int i = 0; i <= cfg.m; ++i)
                rsplit += restricted_lie_char(sol.b[static_cast<size_t>(cfg.m - i)], cfg.p, i, 1,
                                              cfg.degree_cap);
            rep.add("restricted-decomposition/char", params, rwhole == rsplit,
                    rwhole == rsplit ? "" : mismatch_witness(rwhole, rsplit));
        } catch (const Error& e) {
            rep.add("ghost-integrality", params, false, e.what());
        }
    }

    // Coprime factorisation of the resolvent family, and full composition of
    // the Adams family, on seeded random characters.
    {
        const std::vector<std::pair<int, int>> coprime = {{2, 3}, {3, 4}, {2, 5}};
        const std::vector<std::pair<int, int>> anypair = {{2, 2}, {2, 3}, {3, 3}, {2, 6}};
        bool fac_ok = true, comp_ok = true;
        std::string fac_w, comp_w;
        for (int t = 0; t < cfg.random_characters; ++t) {
            SymFunc x = t == 0 ? nat : random_character(rng, 4);
            for (auto [r, s] : coprime) {
                SymFunc lhs = chi(x, r * s) * Rational(mobius(r * s));
                SymFunc rhs = chi(chi(x, s) * Rational(mobius(s)), r) * Rational(mobius(r));
                if (!(lhs == rhs) && fac_ok) {
                    fac_ok = false;
                    fac_w = "sample " + std::to_string(t) + " r=" + std::to_string(r) +
                            " s=" + std::to_string(s);
                }
            }
            for (auto [r, s] : anypair) {
                if (!(chi(chi(x, s), r) == chi(x, r * s)) && comp_ok) {
                    comp_ok = false;
                    comp_w = "sample " + std::to_string(t) + " r=" + std::to_string(r) +
                             " s=" + std::to_string(s);
                }
            }
        }
        std::string params = "samples=" + std::to_string(cfg.random_characters) +
                             " seed=" + std::to_string(cfg.seed);
        rep.add("resolvent-factorisation/char", params + " pairs=(2,3),(3,4),(2,5)", fac_ok,
                fac_w);
        rep.add("adams-composition/char", params, comp_ok, comp_w);
    }

    // The resolvent as a Moebius-weighted divisor sum of Lie characters:
    // sum_{d|r} mobius(r/d) d lie_char(x^{r/d}, d) = mobius(r) chi(x, r).
    {
        bool ok = true;
        std::string witness;
        for (int r = 1; r <= 8 && ok; ++r) {
            SymFunc lhs(Basis::PowerSum);
            for (int d : divisors(r)) {
                int mu = mobius(r / d);
                if (!mu) continue;
                lhs += Rational(mu * d) *
                       lie_char(sym_pow(nat, r / d), d, cfg.degree_cap);
            }
            SymFunc rhs = chi(nat, r) * Rational(mobius(r));
            if (!(lhs == rhs)) {
                ok = false;
                witness = "r=" + std::to_string(r) + " " + mismatch_witness(lhs, rhs);
            }
        }
        rep.add("resolvent-adams-relation/char", "r<=8", ok, witness);
    }

    // Series-operator semantics over the character carrier.
    {
        auto psi = adams_char_family();
        auto phi = resolvent_char_family();
        std::string params = "D=" + std::to_string(cfg.D) + " seed=" + std::to_string(cfg.seed);

        // One-term series V t expand to the classical symmetric/Lie power series.
        TruncSeries<SymFunc> vt = char_series_zero(cfg.D);
        vt.set_coeff(1, nat);
        TruncSeries<SymFunc> symser = star_S(vt, psi);
        bool ok = true;
        std::string witness;
        for (int r = 0; r <= cfg.D && ok; ++r) {
            SymFunc expect = r == 0 ? SymFunc::one()
                                    : SymFunc::basis_element(Basis::Homogeneous,
                                                             Partition::single(r));
            if (!(symser.coeff(r) == expect)) {
                ok = false;
                witness = "t^" + std::to_string(r);
            }
        }
        rep.add("symmetric-power-series", params, ok, witness);

        TruncSeries<SymFunc> lieser = script_L(vt, phi);
        ok = true;
        witness.clear();
        for (int r = 1; r <= cfg.D && ok; ++r) {
            if (!(lieser.coeff(r) == lie_char(nat, r, cfg.degree_cap))) {
                ok = false;
                witness = "t^" + std::to_string(r);
            }
        }
        rep.add("lie-power-series", params, ok, witness);

        // Inverse pairs and the geometric-series identity, on random series.
        bool ls_ok = true, sl_ok = true, pbw_ok = true, explog_ok = true;
        std::string ls_w, sl_w, pbw_w, explog_w;
        for (int t = 0; t < 3; ++t) {
            TruncSeries<SymFunc> f = random_t_series(rng, cfg.D, 2);
            TruncSeries<SymFunc> g = f;
            g.set_coeff(0, SymFunc::one());

            TruncSeries<SymFunc> explog = series_exp(series_log(g));
            if (!(explog == g) && explog_ok) {
                explog_ok = false;
                explog_w = "sample " + std::to_string(t) + " " +
                           series_mismatch_witness(explog, g);
            }
            TruncSeries<SymFunc> logexp = series_log(series_exp(f));
            if (!(logexp == f) && explog_ok) {
                explog_ok = false;
                explog_w = "sample " + std::to_string(t) + " " +
                           series_mismatch_witness(logexp, f);
            }
            TruncSeries<SymFunc> modroundtrip = series_Log(series_Exp(f));
            if (!(modroundtrip == f) && explog_ok) {
                explog_ok = false;
                explog_w = "sample " + std::to_string(t) + " modified pair " +
                           series_mismatch_witness(modroundtrip, f);
            }

            TruncSeries<SymFunc> ls = star_L(star_S(f, psi), phi);
            if (!(ls == f) && ls_ok) {
                ls_ok = false;
                ls_w = "sample " + std::to_string(t) + " " + series_mismatch_witness(ls, f);
            }
            TruncSeries<SymFunc> sl = star_S(star_L(g, phi), psi);
            if (!(sl == g) && sl_ok) {
                sl_ok = false;
                sl_w = "sample " + std::to_string(t) + " " + series_mismatch_witness(sl, g);
            }

            TruncSeries<SymFunc> pbw = star_S(script_L(f, phi), psi);
            TruncSeries<SymFunc> geo = char_series_zero(cfg.D);
            geo.set_coeff(0, SymFunc::one());
            TruncSeries<SymFunc> fpow = geo;
            for (int kk = 1; kk <= cfg.D; ++kk) {
                fpow = fpow * f;
                geo = geo + fpow;
            }
            if (!(pbw == geo) && pbw_ok) {
                pbw_ok = false;
                pbw_w = "sample " + std::to_string(t) + " " + series_mismatch_witness(pbw, geo);
            }
        }
        rep.add("inverse-pair-LS/char", params, ls_ok, ls_w);
        rep.add("inverse-pair-SL/char", params, sl_ok, sl_w);
        rep.add("pbw-geometric-series/char", params, pbw_ok, pbw_w);
        rep.add("exp-log-inverses", params, explog_ok, explog_w);
    }

    return rep;
}

} // namespace liewb
