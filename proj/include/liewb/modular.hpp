#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "liewb/fpmat.hpp"
#include "liewb/rational.hpp"
#include "liewb/report.hpp"
#include "liewb/series.hpp"

namespace liewb {

// Rep-level computations refuse (BudgetExceeded) to build a tensor power whose
// dimension would exceed this, unless the caller raises the limit.
constexpr long long kDefaultTensorBudget = 19683;

// A module for the cyclic group of order p over F_p, given by the action of a
// fixed generator g. Validity means g^p = 1 (equivalently g - 1 is nilpotent
// of index at most p).
struct MatRep {
    int p = 0;
    FpMat g;

    int dim() const { return g.rows(); }
};

// Validating constructor: square matrix, matching modulus, g^p = 1.
MatRep make_rep(int p, FpMat g);

// Indecomposables: J_b is the Jordan block of size b (1 <= b <= p) at
// eigenvalue 1. J_1 is the trivial module, J_p the free one.
MatRep jordan_block_rep(int p, int b);

MatRep direct_sum(const MatRep& a, const MatRep& b);
MatRep tensor(const MatRep& a, const MatRep& b);

// An element of the rationalized Green ring of C_p: coordinates over the
// indecomposables, coords[b-1] = multiplicity of J_b.
struct GreenElement {
    int p = 0;
    std::vector<Rational> coords;

    const Rational& coord(int b) const;  // multiplicity of J_b, 1 <= b <= p
    bool is_zero() const;
    std::string str() const;

    GreenElement& operator+=(const GreenElement& o);
    GreenElement& operator-=(const GreenElement& o);
    GreenElement& operator*=(const Rational& c);
    friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
    friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
    friend GreenElement operator*(GreenElement a, const Rational& c) { return a *= c; }
    friend GreenElement operator*(const Rational& c, GreenElement a) { return a *= c; }
    friend GreenElement operator-(const GreenElement& a) { return a * Rational(-1); }
    friend bool operator==(const GreenElement& a, const GreenElement& b) {
        return a.p == b.p && a.coords == b.coords;
    }
    friend bool operator!=(const GreenElement& a, const GreenElement& b) { return !(a == b); }
};

GreenElement green_zero(int p);
GreenElement green_one(int p);             // class of J_1
GreenElement green_jordan(int p, int b);   // class of J_b

inline GreenElement zero_like(const GreenElement& x) { return green_zero(x.p); }
inline GreenElement one_like(const GreenElement& x) { return green_one(x.p); }

Rational green_dim(const GreenElement& x);
// True when all coordinates are non-negative integers (the class of an actual
// module rather than a virtual difference).
bool is_actual_module(const GreenElement& x);

// Tensor product, extended bilinearly from the indecomposables; the structure
// constants come from splitting J_a (x) J_b into Jordan blocks (cached
// globally per p).
GreenElement operator*(const GreenElement& a, const GreenElement& b);
GreenElement green_pow(const GreenElement& x, int k);

// Jordan type of a valid representation, as a Green ring class. Computed from
// the ranks of the powers of g - 1; throws InvalidRep when g - 1 is not
// nilpotent of index <= p.
GreenElement jordan_type(const MatRep& rep);

// Matrix of g on the degree-d free Lie power L^d(V) inside the d-th tensor
// power, in the basis of bracketed Lyndon words (columns and rows in word
// order). Refuses when dim(V)^d exceeds the tensor budget.
FpMat lie_power_rep(const MatRep& rep, int d, long long tensor_budget = kDefaultTensorBudget);

// Matrix of g on the degree-d restricted Lie power R^d(V): the span of the
// p^s-th associative powers of the bracketed Lyndon words of length d / p^s,
// for each s with p^s dividing d. Basis ordered by ascending Lie degree
// d / p^s, then word order.
FpMat restricted_lie_power_rep(const MatRep& rep, int d,
                               long long tensor_budget = kDefaultTensorBudget);

// Symmetric power S^r(V) on the basis of size-r multisets of basis vectors.
MatRep sym_power_rep(const MatRep& rep, int r, long long tensor_budget = kDefaultTensorBudget);

// Shared context for one prime: memoizes the class-level operations so that
// repeated identities reuse the heavy rank computations. Thread-safe; all
// returned values are plain data.
class GreenRing {
public:
    explicit GreenRing(int p, long long tensor_budget = kDefaultTensorBudget);

    int p() const { return p_; }
    long long tensor_budget() const { return budget_; }

    GreenElement zero() const { return green_zero(p_); }
    GreenElement one() const { return green_one(p_); }
    GreenElement jordan(int b) const { return green_jordan(p_, b); }

    GreenElement decompose(const MatRep& rep) const;   // jordan_type with p check
    // Direct sum realizing an actual class (NegativeCoords otherwise).
    MatRep rep_of(const GreenElement& x) const;

    GreenElement lie_power_class(const GreenElement& x, int d);
    GreenElement restricted_lie_power_class(const GreenElement& x, int d);
    GreenElement sym_power_class(const GreenElement& x, int r);

    // Adams operation: psi_r = r * [t^r] log (sum_j S^j(x) t^j), extended
    // linearly from the indecomposables.
    GreenElement adams(const GreenElement& x, int r);
    // Lie resolvent: phi_r(x) = sum over d | r of mobius(r/d) * d *
    // lie_power_class(x^{r/d}, d), extended linearly from the indecomposables.
    GreenElement resolvent(const GreenElement& x, int r);
    // rho_r(x) = (1/r) * sum over d | r of phi_d(psi_{r/d}(x)).
    GreenElement rho(const GreenElement& x, int r);

    ComponentFamily<GreenElement> adams_family();
    ComponentFamily<GreenElement> resolvent_family();

    // Factor classes B of the Lie-power decomposition in degrees p^i k for
    // i <= m: B[0] = L^k(V) and
    //   B[i] = L^{p^i k}(V) - sum over j = 1..i of L^{p^j}(B[i-j]).
    // Extraction needs each earlier B[j] to be an actual module (its
    // representation enters the next step); NegativeCoords otherwise.
    std::vector<GreenElement> b_classes(const GreenElement& v, int k, int m);

private:
    GreenElement lie_power_class_locked(const GreenElement& x, int d);
    GreenElement restricted_lie_power_class_locked(const GreenElement& x, int d);
    GreenElement sym_power_class_locked(const GreenElement& x, int r);
    GreenElement adams_locked(const GreenElement& x, int r);
    GreenElement adams_jordan_locked(int b, int r);
    GreenElement resolvent_locked(const GreenElement& x, int r);
    GreenElement resolvent_jordan_locked(int b, int r);
    std::vector<long long> actual_key(const GreenElement& x, const char* who) const;

    int p_;
    long long budget_;
    mutable std::mutex mu_;
    std::map<std::pair<std::vector<long long>, int>, GreenElement> lie_cache_;
    std::map<std::pair<std::vector<long long>, int>, GreenElement> restricted_cache_;
    std::map<std::pair<std::vector<long long>, int>, GreenElement> sym_cache_;
    std::map<std::pair<int, int>, GreenElement> adams_cache_;
    std::map<std::pair<int, int>, GreenElement> resolvent_cache_;
};

// Consolidated identity battery over the Green ring. All comparisons exact.
struct VerifyGreenConfig {
    int p = 2;
    int k = 3;            // coprime part for the decomposition checks
    int m = 1;            // decomposition depth
    int D = 8;            // series truncation for typicality checks
    int max_r = 8;        // operation index range for the vanishing grids
    int a_max = 0;        // largest Jordan block exercised; 0 means all up to p
    uint64_t seed = 20260825;
    long long tensor_budget = kDefaultTensorBudget;
};

Report verify_green_identities(const VerifyGreenConfig& cfg);

} // namespace liewb
