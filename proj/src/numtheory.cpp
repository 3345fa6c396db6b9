#include "liewb/numtheory.hpp"

#include <algorithm>
#include <string>

namespace liewb {

int mobius(int n) {
    if (n < 1) throw DomainError("mobius: argument must be >= 1");
    int result = 1;
    for (int q = 2; static_cast<long long>(q) * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<int> divisors(int n) {
    if (n < 1) throw DomainError("divisors: argument must be >= 1");
    std::vector<int> small, large;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

long long ipow_capped(long long base, int e, long long cap) {
    if (base < 0 || e < 0) throw DomainError("ipow_capped: negative input");
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > cap / base)
            throw BudgetExceeded("power " + std::to_string(base) + "^" + std::to_string(e) +
                                 " exceeds cap " + std::to_string(cap));
        r *= base;
        if (r > cap)
            throw BudgetExceeded("power " + std::to_string(base) + "^" + std::to_string(e) +
                                 " exceeds cap " + std::to_string(cap));
    }
    return r;
}

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 62) / std::max<long long>(base, 1))
            throw InternalError("ipow: overflow");
        r *= base;
    }
    return r;
}

} // namespace liewb
