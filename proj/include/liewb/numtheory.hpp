#pragma once

#include <vector>

#include "liewb/errors.hpp"

namespace liewb {

// Moebius function; 0 on non-squarefree input.
int mobius(int n);

// Positive divisors in increasing order.
std::vector<int> divisors(int n);

bool is_prime(int n);

// Integer power with an overflow guard; throws BudgetExceeded past the cap.
long long ipow_capped(long long base, int e, long long cap);

// Plain integer power for small inputs (InternalError on 64-bit overflow risk).
long long ipow(long long base, int e);

} // namespace liewb
