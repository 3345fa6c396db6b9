#include <algorithm>
#include <string>

#include "liewb/char_backend.hpp"
#include "liewb/modular.hpp"
#include "liewb/numtheory.hpp"
#include "liewb/rng.hpp"

namespace liewb {

namespace {

std::string inst(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += " ";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

GreenElement random_actual(Rng& rng, int p) {
    GreenElement x = green_zero(p);
    for (int b = 1; b <= p; ++b)
        x.coords[static_cast<size_t>(b - 1)] = Rational(rng.uniform(0, 2));
    return x;
}

long long witt_dim(long long a, int d) {
    long long acc = 0;
    for (int e : divisors(d)) acc += mobius(e) * ipow(a, d / e);
    return acc / d;
}

bool within(long long a, int d, long long budget) {
    long long space = 1;
    for (int i = 0; i < d; ++i) {
        space *= a;
        if (space > budget) return false;
    }
    return true;
}

} // namespace

Report verify_green_identities(const VerifyGreenConfig& cfg) {
    Report rep;
    GreenRing ring(cfg.p, cfg.tensor_budget);
    Rng rng(cfg.seed);
    const int p = cfg.p;
    const int amax = cfg.a_max >= 1 ? std::min(p, cfg.a_max) : p;

    // Structure constants agree with explicit Kronecker products, and the
    // class-level product is commutative and associative on samples.
    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 6 && ok; ++t) {
            GreenElement x = random_actual(rng, p), y = random_actual(rng, p);
            GreenElement via_rep = ring.decompose(tensor(ring.rep_of(x), ring.rep_of(y)));
            GreenElement via_table = x * y;
            if (!(via_rep == via_table)) {
                ok = false;
                witness = "sample " + std::to_string(t) + ": (" + x.str() + ")*(" + y.str() +
                          ") kronecker " + via_rep.str() + " vs table " + via_table.str();
                break;
            }
            GreenElement swapped = ring.decompose(tensor(ring.rep_of(y), ring.rep_of(x)));
            if (!(swapped == via_table)) {
                ok = false;
                witness = "sample " + std::to_string(t) + ": tensor order changed the class";
                break;
            }
            GreenElement z = random_actual(rng, p);
            if (!((x * y) * z == x * (y * z))) {
                ok = false;
                witness = "sample " + std::to_string(t) + ": associativity";
            }
        }
        rep.add("tensor-structure-consistency", inst({{"p", p}, {"samples", 6}}), ok, witness);
    }

    // Free Lie power dimensions over the Green ring match the Witt formula.
    {
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= amax && ok; ++a)
            for (int d = 1; d <= 5 && ok; ++d) {
                if (!within(a, d, cfg.tensor_budget)) continue;
                Rational got = green_dim(ring.lie_power_class(green_jordan(p, a), d));
                if (got != Rational(witt_dim(a, d))) {
                    ok = false;
                    witness = inst({{"a", a}, {"d", d}}) + ": dim " + got.str() + " vs " +
                              std::to_string(witt_dim(a, d));
                }
            }
        rep.add("witt-dimension/green", inst({{"p", p}, {"max_d", 5}}), ok, witness);
    }

    // Decomposition of Lie powers in degrees p^i k: extract the factor classes
    // and check that they are genuine modules, that they satisfy the ghost
    // equations, that they decompose the restricted Lie power as well, and
    // that their dimensions match the character-level ghost solution.
    for (int a = 2; a <= amax; ++a) {
        std::string params = inst({{"p", p}, {"k", cfg.k}, {"m", cfg.m}, {"a", a}});
        long long top_degree = ipow(p, cfg.m) * cfg.k;
        if (!within(a, static_cast<int>(top_degree), cfg.tensor_budget)) {
            rep.add("B-modules-genuine", params, false, "instance exceeds the tensor budget");
            continue;
        }
        GreenElement v = green_jordan(p, a);
        try {
            std::vector<GreenElement> B = ring.b_classes(v, cfg.k, cfg.m);

            bool ok = true;
            std::string witness;
            for (int i = 0; i <= cfg.m && ok; ++i)
                if (!is_actual_module(B[static_cast<size_t>(i)])) {
                    ok = false;
                    witness = "B_" + std::to_string(ipow(p, i) * cfg.k) + " = " +
                              B[static_cast<size_t>(i)].str();
                }
            rep.add("B-modules-genuine", params, ok, witness);
            if (!ok) continue;

            ok = true;
            witness.clear();
            for (int i = 0; i <= cfg.m && ok; ++i) {
                GreenElement lhs = green_zero(p);
                for (int j = 0; j <= i; ++j)
                    lhs += green_pow(B[static_cast<size_t>(j)],
                                     static_cast<int>(ipow(p, i - j))) *
                           Rational(ipow(p, j));
                GreenElement rhs = ring.lie_power_class(
                    green_pow(v, static_cast<int>(ipow(p, i))), cfg.k);
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = "height " + std::to_string(i) + ": " + lhs.str() + " vs " +
                              rhs.str();
                }
            }
            rep.add("witt-ghost-equation/green", params, ok, witness);

            GreenElement rwhole =
                ring.restricted_lie_power_class(v, static_cast<int>(top_degree));
            GreenElement rsplit = green_zero(p);
            for (int i = 0; i <= cfg.m; ++i)
                rsplit += ring.restricted_lie_power_class(B[static_cast<size_t>(cfg.m - i)],
                                                          static_cast<int>(ipow(p, i)));
            rep.add("restricted-decomposition/green", params, rwhole == rsplit,
                    rwhole == rsplit ? "" : rwhole.str() + " vs " + rsplit.str());

            GhostSolution sol =
                ghost_solve(SymFunc::basis_element(Basis::PowerSum, Partition::single(1)), p,
                            cfg.k, cfg.m);
            ok = true;
            witness.clear();
            for (int i = 0; i <= cfg.m && ok; ++i) {
                Rational want = eval_dim(sol.b[static_cast<size_t>(i)], a);
                Rational got = green_dim(B[static_cast<size_t>(i)]);
                if (got != want) {
                    ok = false;
                    witness = "B_" + std::to_string(ipow(p, i) * cfg.k) + " dim " + got.str() +
                              " vs " + want.str();
                }
            }
            rep.add("ghost-dimension-match", params, ok, witness);
        } catch (const Error& e) {
            rep.add("B-modules-genuine", params, false, e.what());
        }
    }

    // Restricted Lie power dimensions against the character-level count.
    {
        bool ok = true;
        std::string witness;
        int max_d = p == 2 ? 12 : 6;
        for (int a = 1; a <= amax && ok; ++a)
            for (int d = 1; d <= max_d && ok; ++d) {
                if (!within(a, d, cfg.tensor_budget)) continue;
                int k = d, i = 0;
                while (k % p == 0) k /= p, ++i;
                Rational want = eval_dim(
                    restricted_lie_char(
                        SymFunc::basis_element(Basis::PowerSum, Partition::single(1)), p, i, k),
                    a);
                Rational got =
                    green_dim(ring.restricted_lie_power_class(green_jordan(p, a), d));
                if (got != want) {
                    ok = false;
                    witness = inst({{"a", a}, {"d", d}}) + ": dim " + got.str() + " vs " +
                              want.str();
                }
            }
        rep.add("restricted-dimension-match", inst({{"p", p}, {"max_d", max_d}}), ok, witness);
    }

    // Factorisation of the resolvent: the p-power part splits off as the
    // outer factor, Phi^{p^m k} = Phi^{p^m} o Phi^k for k coprime to p.
    // (The reverse composition order genuinely differs in general.)
    {
        bool ok = true;
        std::string witness;
        for (int m = 1; m <= 2 && ok; ++m)
            for (int k = 2; k <= 5 && ok; ++k) {
                if (k % p == 0) continue;
                long long deg = ipow(p, m) * k;
                if (deg > 12) continue;
                for (int a = 1; a <= amax && ok; ++a) {
                    if (!within(a, static_cast<int>(deg), cfg.tensor_budget)) continue;
                    GreenElement direct =
                        ring.resolvent(green_jordan(p, a), static_cast<int>(deg));
                    GreenElement nested = ring.resolvent(
                        ring.resolvent(green_jordan(p, a), k), static_cast<int>(ipow(p, m)));
                    if (!(direct == nested)) {
                        ok = false;
                        witness = inst({{"a", a}, {"m", m}, {"k", k}}) + ": " + direct.str() +
                                  " vs " + nested.str();
                    }
                }
            }
        rep.add("resolvent-factorisation/green", inst({{"p", p}}) + " p^m*k<=12", ok, witness);
    }

    // The resolvent collapses to a Moebius-signed Adams operation away from p.
    {
        bool ok = true;
        std::string witness;
        for (int r = 2; r <= cfg.max_r && ok; ++r) {
            if (r % p == 0) continue;
            for (int a = 1; a <= amax && ok; ++a) {
                if (!within(a, r, cfg.tensor_budget)) continue;
                GreenElement phi = ring.resolvent(green_jordan(p, a), r);
                GreenElement psi = ring.adams(green_jordan(p, a), r) * Rational(mobius(r));
                if (!(phi == psi)) {
                    ok = false;
                    witness = inst({{"a", a}, {"r", r}}) + ": " + phi.str() + " vs " + psi.str();
                }
            }
        }
        rep.add("resolvent-is-mobius-adams/green", inst({{"p", p}, {"max_r", cfg.max_r}}), ok,
                witness);
    }

    // Adams composition away from p.
    {
        bool ok = true;
        std::string witness;
        for (int r = 2; r <= 5 && ok; ++r)
            for (int s = 2; s <= 5 && ok; ++s) {
                if (r % p == 0 || s % p == 0) continue;
                for (int a = 1; a <= amax && ok; ++a) {
                    GreenElement lhs = ring.adams(ring.adams(green_jordan(p, a), s), r);
                    GreenElement rhs = ring.adams(green_jordan(p, a), r * s);
                    if (!(lhs == rhs)) {
                        ok = false;
                        witness = inst({{"a", a}, {"r", r}, {"s", s}}) + ": " + lhs.str() +
                                  " vs " + rhs.str();
                    }
                }
            }
        rep.add("adams-composition/green", inst({{"p", p}}) + " r,s<=5 coprime to p", ok,
                witness);
    }

    // Series plumbing over the Green carrier: one-term series expand to the
    // symmetric and Lie power sequences.
    {
        auto psi = ring.adams_family();
        auto phi = ring.resolvent_family();
        bool sym_ok = true, lie_ok = true;
        std::string sym_w, lie_w;
        for (int a = 1; a <= amax; ++a) {
            if (!within(a, cfg.D, cfg.tensor_budget)) continue;
            TruncSeries<GreenElement> at(cfg.D, green_zero(p));
            at.set_coeff(1, green_jordan(p, a));
            TruncSeries<GreenElement> symser = star_S(at, psi);
            TruncSeries<GreenElement> lieser = script_L(at, phi);
            for (int r = 0; r <= cfg.D; ++r) {
                GreenElement sexp = ring.sym_power_class(green_jordan(p, a), r);
                if (sym_ok && !(symser.coeff(r) == sexp)) {
                    sym_ok = false;
                    sym_w = inst({{"a", a}, {"r", r}}) + ": " + symser.coeff(r).str() + " vs " +
                            sexp.str();
                }
                if (r >= 1) {
                    GreenElement lexp = ring.lie_power_class(green_jordan(p, a), r);
                    if (lie_ok && !(lieser.coeff(r) == lexp)) {
                        lie_ok = false;
                        lie_w = inst({{"a", a}, {"r", r}}) + ": " + lieser.coeff(r).str() +
                                " vs " + lexp.str();
                    }
                }
            }
        }
        rep.add("symmetric-power-series/green", inst({{"p", p}, {"D", cfg.D}}), sym_ok, sym_w);
        rep.add("lie-power-series/green", inst({{"p", p}, {"D", cfg.D}}), lie_ok, lie_w);
    }

    // p-typicality: the composite series keeps only p-power degrees, its
    // coefficients are the rho operations, and degree one returns the module.
    {
        auto psi = ring.adams_family();
        auto phi = ring.resolvent_family();
        bool typ_ok = true, match_ok = true, one_ok = true;
        std::string typ_w, match_w, one_w;
        for (int a = 2; a <= amax; ++a) {
            if (!within(a, cfg.D, cfg.tensor_budget)) continue;
            TruncSeries<GreenElement> at(cfg.D, green_zero(p));
            at.set_coeff(1, green_jordan(p, a));
            TruncSeries<GreenElement> F = star_L(star_S(at, psi), phi);
            if (auto bad = p_typicality_witness(F, p); bad && typ_ok) {
                typ_ok = false;
                typ_w = inst({{"a", a}, {"r", *bad}}) + ": coefficient " +
                        F.coeff(*bad).str();
            }
            for (int r = 1; r <= cfg.D && match_ok; ++r) {
                GreenElement want = ring.rho(green_jordan(p, a), r);
                if (!(F.coeff(r) == want)) {
                    match_ok = false;
                    match_w = inst({{"a", a}, {"r", r}}) + ": " + F.coeff(r).str() + " vs " +
                              want.str();
                }
            }
            if (one_ok && !(F.coeff(1) == green_jordan(p, a))) {
                one_ok = false;
                one_w = inst({{"a", a}}) + ": " + F.coeff(1).str();
            }
        }
        rep.add("p-typicality", inst({{"p", p}, {"D", cfg.D}}), typ_ok, typ_w);
        rep.add("rho-series-match", inst({{"p", p}, {"D", cfg.D}}), match_ok, match_w);
        rep.add("rho-degree-one", inst({{"p", p}}), one_ok, one_w);
    }

    // rho vanishes at every index that is not a power of p ...
    {
        bool ok = true;
        std::string witness;
        for (int r = 2; r <= cfg.max_r && ok; ++r) {
            if (is_prime_power_of(r, p)) continue;
            for (int a = 1; a <= amax && ok; ++a) {
                if (!within(a, r, cfg.tensor_budget)) continue;
                GreenElement got = ring.rho(green_jordan(p, a), r);
                if (!got.is_zero()) {
                    ok = false;
                    witness = inst({{"a", a}, {"r", r}}) + ": " + got.str();
                }
            }
        }
        rep.add("rho-vanishing", inst({{"p", p}, {"max_r", cfg.max_r}}), ok, witness);
    }

    // ... and at proper prime powers p^m with m >= 2.
    {
        bool ok = true;
        std::string witness;
        bool any = false;
        for (long long r = static_cast<long long>(p) * p; r <= cfg.max_r; r *= p) {
            for (int a = 1; a <= amax && ok; ++a) {
                if (!within(a, static_cast<int>(r), cfg.tensor_budget)) continue;
                any = true;
                GreenElement got = ring.rho(green_jordan(p, a), static_cast<int>(r));
                if (!got.is_zero()) {
                    ok = false;
                    witness = inst({{"a", a}, {"r", r}}) + ": " + got.str();
                }
            }
        }
        if (any)
            rep.add("rho-prime-power-vanishing", inst({{"p", p}, {"max_r", cfg.max_r}}), ok,
                    witness);
    }

    return rep;
}

} // namespace liewb
