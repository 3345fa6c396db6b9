#pragma once

// Independent cross-check oracle: expands symmetric functions as honest
// polynomials in n variables (dense exponent-vector maps over exact
// rationals). Deliberately avoids the library's basis-conversion machinery:
// power sums, complete/elementary generators are expanded from their
// definitions, monomial sums by permutation enumeration, and Schur functions
// by the bialternant ratio with exact polynomial division.

#include <map>
#include <vector>

#include "liewb/partition.hpp"
#include "liewb/rational.hpp"
#include "liewb/symfunc.hpp"

namespace oracle {

// exponent vector (fixed length n) -> coefficient
using Poly = std::map<std::vector<int>, liewb::Rational>;

Poly zero();
Poly one(int n);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& a, int k);
Poly scale(Poly a, const liewb::Rational& c);

Poly power_sum(int n, int r);
Poly complete_h(int n, int d);
Poly elementary_e(int n, int d);
Poly monomial_sym(int n, const liewb::Partition& lam);
Poly schur(int n, const liewb::Partition& lam);

// Expand f (in whatever basis it is stored) as a polynomial in n variables.
Poly expand(const liewb::SymFunc& f, int n);

// x_i -> x_i^r on an expanded polynomial.
Poly frobenius_subst(const Poly& a, int r);

// Value at x_1 = ... = x_n = 1.
liewb::Rational eval_ones(const Poly& a);

} // namespace oracle
