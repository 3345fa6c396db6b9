#pragma once

#include <cstdint>
#include <vector>

#include "liewb/numtheory.hpp"
#include "liewb/report.hpp"
#include "liewb/series.hpp"
#include "liewb/symfunc.hpp"

namespace liewb {

// Computations refuse (BudgetExceeded) rather than run past this total degree.
constexpr int kDefaultDegreeCap = 64;

// Character of the degree-r free Lie power of a module with character f:
// (1/r) * sum over d | r of mobius(d) * chi(f^{r/d}, d).
// Output must land in the integral monomial lattice; IntegralityError otherwise
// (it means f was not a genuine character).
SymFunc lie_char(const SymFunc& f, int r, int degree_cap = kDefaultDegreeCap);

// Character of the degree-(p^i k) restricted Lie power for p prime, p not
// dividing k: sum over s + j = i of chi(lie_char(f, p^j k), p^s). The s-th
// summand accounts for the p^s-th associative powers of the degree-(p^j k)
// free Lie power basis.
SymFunc restricted_lie_char(const SymFunc& f, int p, int i, int k,
                            int degree_cap = kDefaultDegreeCap);

// Factor characters of the Lie-power decomposition in degrees p^i k, i <= m,
// obtained by solving the Witt-type ghost equations
//   sum over j <= i of p^j * b_j^{p^{i-j}} = ghost_i := lie_char(f^{p^i}, k).
struct GhostSolution {
    int p = 0, k = 0, m = 0;
    std::vector<SymFunc> b;       // b[i] = factor character in degree p^i k
    std::vector<SymFunc> ghosts;  // ghosts[i] = lie_char(f^{p^i}, k)
};

GhostSolution ghost_solve(const SymFunc& f, int p, int k, int m,
                          int degree_cap = kDefaultDegreeCap);

// Component families over the character carrier: the Adams family is the
// degree-scaling endomorphism chi, and the resolvent family is its Moebius
// twist. Both are Q-linear with index 1 the identity.
ComponentFamily<SymFunc> adams_char_family();
ComponentFamily<SymFunc> resolvent_char_family();

// Series over the character carrier, coefficients normalized to power sums.
TruncSeries<SymFunc> char_series_zero(int D);
TruncSeries<SymFunc> char_series(int D, const std::vector<SymFunc>& coeffs);

// Consolidated identity battery at the character level. All comparisons exact.
struct VerifyCharConfig {
    int p = 2;          // prime for the decompositions and ghost equations
    int k = 3;          // coprime part of the degree
    int m = 1;          // decomposition depth: degrees p^i k for i <= m
    int D = 8;          // series truncation for the operator checks
    int n = 2;          // variable count for dimension spot checks
    uint64_t seed = 20260825;
    int random_characters = 8;   // sample size for randomized identities
    int degree_cap = kDefaultDegreeCap;
};

Report verify_char_identities(const VerifyCharConfig& cfg);

} // namespace liewb
