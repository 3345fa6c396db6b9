#include "liewb/lyndon.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace liewb {

namespace {

// Codes must fit comfortably in 64 bits with room for concatenation shifts.
void check_size(int alphabet, int length) {
    if (alphabet < 0) throw DomainError("word code: negative alphabet");
    if (length < 0) throw DomainError("word code: negative length");
    double bits = length * std::log2(std::max(alphabet, 2));
    if (bits > 62) throw BudgetExceeded("word code: alphabet^length exceeds 62 bits");
}

uint64_t upow(uint64_t base, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

uint64_t word_encode(const std::vector<int>& letters, int alphabet) {
    check_size(alphabet, static_cast<int>(letters.size()));
    uint64_t code = 0;
    for (int c : letters) {
        if (c < 0 || c >= alphabet) throw DomainError("word_encode: letter out of range");
        code = code * static_cast<uint64_t>(alphabet) + static_cast<uint64_t>(c);
    }
    return code;
}

std::vector<int> word_decode(uint64_t code, int alphabet, int length) {
    check_size(alphabet, length);
    if (alphabet < 1) throw DomainError("word_decode: empty alphabet");
    std::vector<int> letters(static_cast<size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        letters[static_cast<size_t>(i)] = static_cast<int>(code % static_cast<uint64_t>(alphabet));
        code /= static_cast<uint64_t>(alphabet);
    }
    if (code) throw DomainError("word_decode: code too large for the given length");
    return letters;
}

bool is_lyndon(const std::vector<int>& w) {
    if (w.empty()) return false;
    for (size_t s = 1; s < w.size(); ++s) {
        // w must be strictly less than its suffix starting at s.
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(s),
                                          w.end()))
            return false;
    }
    return true;
}

std::vector<uint64_t> lyndon_words(int alphabet, int d) {
    if (d < 1) throw DomainError("lyndon_words: length must be >= 1");
    check_size(alphabet, d);
    std::vector<uint64_t> out;
    if (alphabet == 0) return out;
    std::vector<int> t{0};
    if (d == 1) out.push_back(0);
    while (true) {
        // Extend t periodically to length d, then advance to the next Lyndon word.
        size_t base = t.size();
        t.resize(static_cast<size_t>(d));
        for (size_t i = base; i < t.size(); ++i) t[i] = t[i - base];
        while (!t.empty() && t.back() == alphabet - 1) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        if (static_cast<int>(t.size()) == d) out.push_back(word_encode(t, alphabet));
    }
    return out;
}

LyndonTable::LyndonTable(int alphabet) : a_(alphabet) {
    if (alphabet < 1) throw DomainError("LyndonTable: alphabet must be nonempty");
}

const LyndonEntry& LyndonTable::entry(int length, uint64_t code) {
    std::scoped_lock lk(mu_);
    return entry_locked(length, code);
}

const LyndonEntry& LyndonTable::entry_locked(int length, uint64_t code) {
    auto key = std::make_pair(length, code);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<int> w = word_decode(code, a_, length);
    if (!is_lyndon(w)) throw DomainError("LyndonTable: word is not Lyndon");

    LyndonEntry e;
    e.word = code;
    e.length = length;
    if (length == 1) {
        e.expansion = {{code, 1}};
        return memo_.emplace(key, std::move(e)).first->second;
    }

    // Right standard factorization: v is the longest proper Lyndon suffix.
    int vlen = 0;
    for (int lv = length - 1; lv >= 1; --lv) {
        std::vector<int> suffix(w.end() - lv, w.end());
        if (is_lyndon(suffix)) { vlen = lv; break; }
    }
    if (vlen == 0) throw InternalError("LyndonTable: no Lyndon suffix found");
    int ulen = length - vlen;
    std::vector<int> u(w.begin(), w.begin() + ulen);
    std::vector<int> v(w.end() - vlen, w.end());
    if (!is_lyndon(u)) throw InternalError("LyndonTable: standard left factor is not Lyndon");

    e.left_length = ulen;
    e.left = word_encode(u, a_);
    e.right = word_encode(v, a_);

    const LyndonEntry& eu = entry_locked(ulen, e.left);
    const LyndonEntry& ev = entry_locked(vlen, e.right);
    uint64_t shift_v = upow(static_cast<uint64_t>(a_), vlen);
    uint64_t shift_u = upow(static_cast<uint64_t>(a_), ulen);
    std::map<uint64_t, long long> acc;
    for (const auto& [cu, xu] : eu.expansion)
        for (const auto& [cv, xv] : ev.expansion) {
            acc[cu * shift_v + cv] += xu * xv;
            acc[cv * shift_u + cu] -= xv * xu;
        }
    for (const auto& [c, x] : acc)
        if (x) e.expansion.emplace_back(c, x);

    if (e.expansion.empty() || e.expansion.front().first != code ||
        e.expansion.front().second != 1)
        throw InternalError("LyndonTable: bracket expansion lost its leading term");
    return memo_.emplace(key, std::move(e)).first->second;
}

LyndonTable& lyndon_table(int alphabet) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<LyndonTable>> tables;
    std::scoped_lock lk(mu);
    auto it = tables.find(alphabet);
    if (it == tables.end())
        it = tables.emplace(alphabet, std::make_unique<LyndonTable>(alphabet)).first;
    return *it->second;
}

} // namespace liewb
