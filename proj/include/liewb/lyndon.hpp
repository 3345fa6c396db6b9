#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "liewb/errors.hpp"

namespace liewb {

// Words of fixed length d over the alphabet {0, .., a-1} are encoded as their
// base-a value with the leftmost letter most significant, so lexicographic
// order on words of one length is numeric order on codes, and the code of a
// concatenation uv is code(u) * a^{len(v)} + code(v).
uint64_t word_encode(const std::vector<int>& letters, int alphabet);
std::vector<int> word_decode(uint64_t code, int alphabet, int length);

// True when the word is strictly smaller than all of its proper suffixes.
bool is_lyndon(const std::vector<int>& letters);

// Codes of the Lyndon words of length exactly d, in lexicographic order
// (Duval's generation).
std::vector<uint64_t> lyndon_words(int alphabet, int d);

// A Lyndon word together with its right standard factorization w = u v (v the
// longest proper Lyndon suffix; only for length >= 2) and the expansion in the
// free associative algebra of its bracketing
//   b(letter) = letter,   b(uv) = b(u) b(v) - b(v) b(u),
// as a sparse integer vector over codes of words of the same length, sorted by
// code. The least code in the expansion is always the word itself, with
// coefficient exactly 1.
struct LyndonEntry {
    uint64_t word = 0;
    int length = 0;
    int left_length = 0;   // 0 for single letters
    uint64_t left = 0;
    uint64_t right = 0;
    std::vector<std::pair<uint64_t, long long>> expansion;
};

// Memoized bracket expansions over one alphabet. Thread-safe.
class LyndonTable {
public:
    explicit LyndonTable(int alphabet);
    const LyndonEntry& entry(int length, uint64_t code);

private:
    const LyndonEntry& entry_locked(int length, uint64_t code);
    int a_;
    std::mutex mu_;
    std::map<std::pair<int, uint64_t>, LyndonEntry> memo_;
};

// Shared per-alphabet tables (expansions do not depend on any modulus).
LyndonTable& lyndon_table(int alphabet);

} // namespace liewb
