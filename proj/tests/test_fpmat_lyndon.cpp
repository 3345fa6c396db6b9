#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "liewb/fpmat.hpp"
#include "liewb/lyndon.hpp"
#include "liewb/numtheory.hpp"
#include "liewb/rng.hpp"

using namespace liewb;

namespace {

FpMat from_rows(int p, const std::vector<std::vector<long long>>& rows) {
    FpMat m(p, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

FpMat random_mat(Rng& rng, int p, int rows, int cols) {
    FpMat m(p, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, rng.uniform(0, p - 1));
    return m;
}

// Independent rank oracle: plain Gaussian elimination on int copies.
int rank_oracle(const FpMat& m) {
    int p = m.p();
    std::vector<std::vector<int>> a(static_cast<size_t>(m.rows()),
                                    std::vector<int>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)]) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        int inv = inverse_mod(a[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < m.cols(); ++j)
            a[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || !a[static_cast<size_t>(i)][static_cast<size_t>(col)]) continue;
            int f = p - a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            for (int j = 0; j < m.cols(); ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                     f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<int> letters(std::initializer_list<int> l) { return std::vector<int>(l); }

// Necklace-counting formula for the number of Lyndon words.
long long lyndon_count(int a, int d) {
    long long total = 0;
    for (int e : divisors(d)) total += mobius(e) * ipow(a, d / e);
    return total / d;
}

} // namespace

TEST_CASE("entry storage reduces modulo p") {
    FpMat m(5, 2, 3);
    m.set(0, 0, 7);
    m.set(0, 1, -1);
    m.set(1, 2, 10);
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(0, 1) == 4);
    CHECK(m.at(1, 2) == 0);
    CHECK_THROWS_AS(m.set(2, 0, 1), DomainError);
    CHECK_THROWS_AS(m.at(0, 3), DomainError);
    CHECK_FALSE(m.is_zero());
    CHECK(FpMat(3, 4, 4).is_zero());
    CHECK(FpMat::identity(3, 4).is_identity());
    CHECK_FALSE(FpMat::identity(3, 4).is_zero());
}

TEST_CASE("ring axioms on random matrices") {
    Rng rng(20260825);
    for (int p : {2, 3, 5, 7}) {
        FpMat a = random_mat(rng, p, 4, 4), b = random_mat(rng, p, 4, 4),
              c = random_mat(rng, p, 4, 4);
        FpMat i4 = FpMat::identity(p, 4);
        CHECK(a * i4 == a);
        CHECK(i4 * a == a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK(a - a == FpMat(p, 4, 4));
        CHECK(a.pow(0) == i4);
        CHECK(a.pow(3) == a * (a * a));
    }
}

TEST_CASE("rank: pinned cases and oracle comparison") {
    CHECK(FpMat(3, 5, 7).rank() == 0);
    CHECK(FpMat::identity(7, 6).rank() == 6);

    // det = -2, so the rank drops only in characteristic 2
    auto m = [](int p) { return from_rows(p, {{1, 2}, {3, 4}}); };
    CHECK(m(2).rank() == 1);
    CHECK(m(3).rank() == 2);
    CHECK(m(5).rank() == 2);
    CHECK(m(7).rank() == 2);
    // proportional rows in every characteristic
    CHECK(from_rows(5, {{1, 2}, {2, 4}}).rank() == 1);

    Rng rng(20260825);
    for (int p : {2, 3, 5, 7})
        for (int trial = 0; trial < 8; ++trial) {
            FpMat a = random_mat(rng, p, rng.uniform(1, 7), rng.uniform(1, 7));
            CHECK(a.rank() == rank_oracle(a));
        }
}

TEST_CASE("rank is invariant under row and column permutations") {
    Rng rng(20260825);
    for (int p : {2, 5}) {
        FpMat a = random_mat(rng, p, 5, 5);
        FpMat perm(p, 5, 5); // cyclic shift
        for (int i = 0; i < 5; ++i) perm.set(i, (i + 1) % 5, 1);
        CHECK((perm * a).rank() == a.rank());
        CHECK((a * perm).rank() == a.rank());
        CHECK(perm.pow(5).is_identity());
    }
}

TEST_CASE("kronecker and block diagonal structure") {
    Rng rng(20260825);
    for (int p : {2, 3, 5}) {
        FpMat a = random_mat(rng, p, 2, 3), b = random_mat(rng, p, 3, 2);
        FpMat c = random_mat(rng, p, 3, 2), d = random_mat(rng, p, 2, 3);
        // mixed-product rule (A (x) B)(C (x) D) = AC (x) BD
        CHECK(FpMat::kronecker(a, b) * FpMat::kronecker(c, d) ==
              FpMat::kronecker(a * c, b * d));
        CHECK(FpMat::kronecker(FpMat::identity(p, 2), FpMat::identity(p, 3)) ==
              FpMat::identity(p, 6));

        FpMat s = random_mat(rng, p, 3, 3), t = random_mat(rng, p, 4, 4);
        FpMat bd = FpMat::block_diag(s, t);
        CHECK(bd.rows() == 7);
        CHECK(bd.rank() == s.rank() + t.rank());
        CHECK(bd.at(3, 3) == t.at(0, 0));
        CHECK(bd.at(0, 3) == 0);
        CHECK(FpMat::block_diag(s, t).pow(2) == FpMat::block_diag(s.pow(2), t.pow(2)));
    }
    // explicit 2x2 (x) 2x2 layout check
    FpMat e = from_rows(5, {{1, 2}, {3, 4}});
    FpMat f = from_rows(5, {{0, 1}, {1, 0}});
    FpMat k = FpMat::kronecker(e, f);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1) == 1);  // e00 * f01
    CHECK(k.at(0, 3) == 2);  // e01 * f01
    CHECK(k.at(3, 2) == 4);  // e11 * f10
}

TEST_CASE("modular inverse") {
    for (int p : {2, 3, 5, 7, 13})
        for (int a = 1; a < p; ++a) CHECK(a * inverse_mod(a, p) % p == 1);
    CHECK(inverse_mod(-1, 7) == 6);
    CHECK_THROWS_AS(inverse_mod(0, 5), DomainError);
}

TEST_CASE("word codes") {
    CHECK(word_encode(letters({0, 1}), 2) == 1);
    CHECK(word_encode(letters({1, 0}), 2) == 2);
    CHECK(word_encode(letters({0, 0, 1, 0, 1}), 2) == 5);
    CHECK(word_encode(letters({2, 1}), 3) == 7);
    CHECK(word_decode(5, 2, 5) == letters({0, 0, 1, 0, 1}));

    Rng rng(20260825);
    for (int a : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            int len = rng.uniform(1, 8);
            std::vector<int> w(static_cast<size_t>(len));
            for (int& x : w) x = rng.uniform(0, a - 1);
            CHECK(word_decode(word_encode(w, a), a, len) == w);
        }
        // code of a concatenation: code(u) * a^len(v) + code(v)
        std::vector<int> u = {1, 0}, v = {0, 1, 1};
        std::vector<int> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(word_encode(uv, a) ==
              word_encode(u, a) * static_cast<uint64_t>(ipow(a, 3)) + word_encode(v, a));
    }
}

TEST_CASE("Lyndon word recognition") {
    CHECK(is_lyndon(letters({0})));
    CHECK(is_lyndon(letters({1})));
    CHECK(is_lyndon(letters({0, 1})));
    CHECK(is_lyndon(letters({0, 1, 1})));
    CHECK(is_lyndon(letters({0, 0, 1, 1})));
    CHECK(is_lyndon(letters({0, 0, 1, 0, 1})));
    CHECK_FALSE(is_lyndon(letters({0, 0})));
    CHECK_FALSE(is_lyndon(letters({1, 0})));
    CHECK_FALSE(is_lyndon(letters({0, 1, 0})));
    CHECK_FALSE(is_lyndon(letters({0, 1, 0, 1})));
    CHECK_FALSE(is_lyndon(letters({0, 0, 1, 1, 0})));
}

TEST_CASE("Lyndon word generation matches the necklace-counting formula") {
    for (int a : {2, 3})
        for (int d = 1; d <= (a == 2 ? 12 : 7); ++d) {
            auto words = lyndon_words(a, d);
            CHECK(static_cast<long long>(words.size()) == lyndon_count(a, d));
            uint64_t prev = 0;
            for (size_t i = 0; i < words.size(); ++i) {
                CHECK(is_lyndon(word_decode(words[i], a, d)));
                if (i) CHECK(words[i] > prev);
                prev = words[i];
            }
        }
    CHECK(lyndon_words(2, 12).size() == 335);
}

TEST_CASE("bracketing table: standard factorizations and expansions") {
    LyndonTable& tab = lyndon_table(2);

    const LyndonEntry& ab = tab.entry(2, word_encode(letters({0, 1}), 2));
    CHECK(ab.left_length == 1);
    CHECK(ab.left == 0);   // "a"
    CHECK(ab.right == 1);  // "b" as a length-1 word
    REQUIRE(ab.expansion.size() == 2);
    CHECK(ab.expansion[0] == std::make_pair(word_encode(letters({0, 1}), 2), 1LL));
    CHECK(ab.expansion[1] == std::make_pair(word_encode(letters({1, 0}), 2), -1LL));

    // aab = a.ab, and its bracketing expands to aab - 2 aba + baa
    const LyndonEntry& aab = tab.entry(3, word_encode(letters({0, 0, 1}), 2));
    CHECK(aab.left_length == 1);
    CHECK(aab.left == 0);
    CHECK(aab.right == word_encode(letters({0, 1}), 2));
    REQUIRE(aab.expansion.size() == 3);
    CHECK(aab.expansion[0] == std::make_pair(word_encode(letters({0, 0, 1}), 2), 1LL));
    CHECK(aab.expansion[1] == std::make_pair(word_encode(letters({0, 1, 0}), 2), -2LL));
    CHECK(aab.expansion[2] == std::make_pair(word_encode(letters({1, 0, 0}), 2), 1LL));

    // aabab = aab.ab (right factor is the longest proper Lyndon suffix)
    const LyndonEntry& w = tab.entry(5, word_encode(letters({0, 0, 1, 0, 1}), 2));
    CHECK(w.left_length == 3);
    CHECK(w.left == word_encode(letters({0, 0, 1}), 2));
    CHECK(w.right == word_encode(letters({0, 1}), 2));

    // every expansion leads with the word itself, coefficient exactly one
    for (int d = 1; d <= 6; ++d)
        for (uint64_t code : lyndon_words(2, d)) {
            const LyndonEntry& e = tab.entry(d, code);
            REQUIRE(!e.expansion.empty());
            CHECK(e.expansion.front().first == code);
            CHECK(e.expansion.front().second == 1);
            for (size_t i = 1; i < e.expansion.size(); ++i)
                CHECK(e.expansion[i].first > e.expansion[i - 1].first);
        }
}
