#pragma once

#include <cstdint>
#include <random>

#include "liewb/errors.hpp"

namespace liewb {

// Deterministic RNG for property checks. Draws go through the raw mt19937_64
// stream (whose output sequence the standard pins down exactly) instead of
// std::uniform_int_distribution, whose mapping is implementation-defined; the
// slight modulo bias is irrelevant for test-case generation and reproducibility
// across standard libraries is not.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    int uniform(int lo, int hi) {
        if (lo > hi) throw DomainError("Rng::uniform: empty range");
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace liewb
