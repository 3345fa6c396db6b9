#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "liewb/char_backend.hpp"
#include "liewb/lyndon.hpp"
#include "liewb/numtheory.hpp"
#include "liewb/partition.hpp"
#include "liewb/symfunc.hpp"

using namespace liewb;

namespace {

SymFunc natural(int copies = 1) {
    return SymFunc::basis_element(Basis::PowerSum, Partition::single(1), Rational(copies));
}

Partition pt(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("free Lie power dimensions over two variables") {
    const long long expect[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
    for (int r = 1; r <= 10; ++r)
        CHECK(eval_dim(lie_char(natural(), r), 2) == Rational(expect[r - 1]));
}

TEST_CASE("Lie character dimensions count Lyndon words") {
    for (int n : {2, 3})
        for (int r = 1; r <= 8; ++r)
            CHECK(eval_dim(lie_char(natural(), r), n) ==
                  Rational(static_cast<long long>(lyndon_words(n, r).size())));
    // and for a non-free starting module: L^2 of a character of dimension 3
    SymFunc h2 = SymFunc::basis_element(Basis::Homogeneous, pt({2}));
    CHECK(eval_dim(lie_char(h2, 2), 2) == Rational(3));
}

TEST_CASE("pinned low-degree Lie characters") {
    CHECK(lie_char(natural(), 1) == natural());
    // L^2(V) = e_2: (p_1^2 - p_2)/2
    SymFunc l2 = lie_char(natural(), 2);
    CHECK(l2.coeff(pt({1, 1})) == Rational(1, 2));
    CHECK(l2.coeff(pt({2})) == Rational(-1, 2));
    CHECK(l2 == SymFunc::basis_element(Basis::Elementary, pt({2})));
    // L^3(V) = (p_1^3 - p_3)/3
    SymFunc l3 = lie_char(natural(), 3);
    CHECK(l3.coeff(pt({1, 1, 1})) == Rational(1, 3));
    CHECK(l3.coeff(pt({3})) == Rational(-1, 3));
    CHECK(l3.terms().size() == 2);
    CHECK(is_schur_positive(l2));
    CHECK(is_schur_positive(l3));
}

TEST_CASE("Lie character rejects non-characters and over-budget degrees") {
    CHECK_THROWS_AS(lie_char(natural(), 0), DomainError);
    SymFunc half = SymFunc::basis_element(Basis::PowerSum, pt({1}), Rational(1, 2));
    CHECK_THROWS_AS(lie_char(half, 2), IntegralityError);
    CHECK_THROWS_AS(lie_char(natural(), 100), BudgetExceeded);
    CHECK_NOTHROW(lie_char(natural(), 10, 10));
    CHECK_THROWS_AS(lie_char(natural(), 11, 10), BudgetExceeded);
}

TEST_CASE("restricted Lie characters") {
    // dim R^2(V) = 3 for a two-dimensional module at p = 2
    CHECK(eval_dim(restricted_lie_char(natural(), 2, 1, 1), 2) == Rational(3));

    // additive structure: sum over s+j=i of the p^s-th degree scaling of the
    // degree-(p^j k) Lie character
    for (int p : {2, 3})
        for (int i : {0, 1, 2})
            for (int k : {1, 3}) {
                if (k % p == 0) continue;
                SymFunc acc(Basis::PowerSum);
                for (int s = 0; s <= i; ++s)
                    acc += chi(lie_char(natural(), static_cast<int>(ipow(p, i - s)) * k),
                               static_cast<int>(ipow(p, s)));
                CHECK(restricted_lie_char(natural(), p, i, k) == acc);
            }

    CHECK_THROWS_AS(restricted_lie_char(natural(), 4, 1, 1), DomainError);
    CHECK_THROWS_AS(restricted_lie_char(natural(), 2, 1, 2), DomainError);
    CHECK_THROWS_AS(restricted_lie_char(natural(), 2, -1, 1), DomainError);
    CHECK_THROWS_AS(restricted_lie_char(natural(), 2, 1, 0), DomainError);
}

TEST_CASE("ghost solver: pinned factors at p=2, k=3, depth 1") {
    GhostSolution sol = ghost_solve(natural(), 2, 3, 1);
    REQUIRE(sol.b.size() == 2);
    REQUIRE(sol.ghosts.size() == 2);

    CHECK(sol.b[0] == lie_char(natural(), 3));
    CHECK(sol.ghosts[0] == sol.b[0]);
    CHECK(sol.ghosts[1] == lie_char(sym_pow(natural(), 2), 3));

    SymFunc b1 = to_basis(sol.b[1], Basis::PowerSum);
    CHECK(b1.coeff(pt({3, 3})) == Rational(-2, 9));
    CHECK(b1.coeff(pt({3, 1, 1, 1})) == Rational(1, 9));
    CHECK(b1.coeff(pt({1, 1, 1, 1, 1, 1})) == Rational(1, 9));
    CHECK(b1.terms().size() == 3);
    CHECK(eval_dim(sol.b[1], 2) == Rational(8));

    for (const SymFunc& b : sol.b) {
        CHECK(has_integral_monomial_coeffs(b));
        CHECK(is_schur_positive(b));
    }
    // the defining triangular equations, re-expanded from scratch
    for (int i = 0; i <= 1; ++i) {
        SymFunc lhs(Basis::PowerSum);
        for (int j = 0; j <= i; ++j)
            lhs += Rational(ipow(2, j)) *
                   sym_pow(sol.b[static_cast<size_t>(j)], static_cast<int>(ipow(2, i - j)));
        CHECK(lhs == sol.ghosts[static_cast<size_t>(i)]);
    }
}

TEST_CASE("ghost solver: other primes and depths") {
    GhostSolution sol32 = ghost_solve(natural(), 3, 2, 1);
    CHECK(eval_dim(sol32.b[0], 2) == Rational(1));
    CHECK(eval_dim(sol32.b[1], 2) == Rational(9));
    CHECK(is_schur_positive(sol32.b[1]));

    GhostSolution depth2 = ghost_solve(natural(), 2, 1, 2);
    REQUIRE(depth2.b.size() == 3);
    for (int i = 0; i <= 2; ++i) {
        SymFunc lhs(Basis::PowerSum);
        for (int j = 0; j <= i; ++j)
            lhs += Rational(ipow(2, j)) *
                   sym_pow(depth2.b[static_cast<size_t>(j)], static_cast<int>(ipow(2, i - j)));
        CHECK(lhs == depth2.ghosts[static_cast<size_t>(i)]);
        CHECK(is_schur_positive(depth2.b[static_cast<size_t>(i)]));
    }

    // two-copy module (dimension 4 at n=2): still integral and Schur positive
    GhostSolution two = ghost_solve(natural(2), 2, 3, 1);
    CHECK(is_schur_positive(two.b[1]));
}

TEST_CASE("ghost solver input validation") {
    CHECK_THROWS_AS(ghost_solve(natural(), 4, 3, 1), DomainError);   // p not prime
    CHECK_THROWS_AS(ghost_solve(natural(), 2, 2, 1), DomainError);   // p | k
    CHECK_THROWS_AS(ghost_solve(natural(), 2, 3, -1), DomainError);  // negative depth
    SymFunc virt = natural() - SymFunc::basis_element(Basis::PowerSum, pt({2}));
    CHECK_THROWS_AS(ghost_solve(virt, 2, 3, 1), DomainError);        // virtual character
    SymFunc half = SymFunc::basis_element(Basis::PowerSum, pt({1}), Rational(1, 2));
    CHECK_THROWS_AS(ghost_solve(half, 2, 3, 1), DomainError);        // fractional character
    CHECK_THROWS_AS(ghost_solve(natural(), 2, 3, 6), BudgetExceeded); // 2^6*3 > 64
}

TEST_CASE("component families over the character carrier") {
    SymFunc f = to_basis(SymFunc::basis_element(Basis::Homogeneous, pt({2})), Basis::PowerSum) +
                SymFunc::basis_element(Basis::PowerSum, pt({1}), Rational(-2));
    auto psi = adams_char_family();
    auto phi = resolvent_char_family();
    CHECK(psi(1, f) == f);
    CHECK(phi(1, f) == f);
    CHECK(psi(3, f) == chi(f, 3));
    CHECK(phi(4, f).is_zero());               // squarefull index dies
    CHECK(phi(2, f) == chi(f, 2) * Rational(-1));
    CHECK(phi(6, f) == chi(f, 6));            // mobius(6) = 1
}

TEST_CASE("character series constructor validates length") {
    CHECK_THROWS_AS(char_series(3, {SymFunc::zero()}), DomainError);
    auto s = char_series(1, {SymFunc::zero(), natural()});
    CHECK(s.coeff(1) == natural());
    CHECK(char_series_zero(4).truncation() == 4);
}

TEST_CASE("identity battery passes at the default configuration") {
    VerifyCharConfig cfg; // p=2, k=3, m=1, D=8, n=2
    Report rep = verify_char_identities(cfg);
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) {
        INFO(c.identity << " [" << c.params << "] " << c.witness);
        CHECK(c.pass);
    }
    std::set<std::string> names;
    for (const auto& c : rep.checks) names.insert(c.identity);
    const std::set<std::string> expected = {
        "log-h-series",           "natural-lie-character",
        "witt-dimension",         "ghost-integrality",
        "ghost-schur-positivity", "witt-ghost-equation/char",
        "lie-decomposition/char", "restricted-decomposition/char",
        "resolvent-factorisation/char", "adams-composition/char",
        "resolvent-adams-relation/char", "symmetric-power-series",
        "lie-power-series",       "inverse-pair-LS/char",
        "inverse-pair-SL/char",   "pbw-geometric-series/char",
        "exp-log-inverses",
    };
    CHECK(names == expected);
}

TEST_CASE("identity battery passes at p=3") {
    VerifyCharConfig cfg;
    cfg.p = 3;
    cfg.k = 2;
    cfg.D = 6;
    cfg.random_characters = 4;
    Report rep = verify_char_identities(cfg);
    for (const auto& c : rep.checks) {
        INFO(c.identity << " [" << c.params << "] " << c.witness);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
}
