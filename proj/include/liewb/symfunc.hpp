#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liewb/partition.hpp"
#include "liewb/rational.hpp"

namespace liewb {

// The five classical bases of the ring of symmetric functions. Elements are
// finite rational combinations of basis terms indexed by partitions; there is
// no variable count (work happens in the inverse limit), so conversions are
// exact and restriction to finitely many variables is a separate operation.
enum class Basis : char {
    PowerSum = 'p',
    Monomial = 'm',
    Homogeneous = 'h',
    Elementary = 'e',
    Schur = 's',
};

char basis_char(Basis b);
Basis basis_from_char(char c);

// A symmetric function tagged with the basis its term map is written in.
// Invariants: no explicit zero coefficients; term map ordered canonically.
class SymFunc {
public:
    using TermMap = std::map<Partition, Rational, PartitionCanonicalLess>;

    SymFunc() : basis_(Basis::PowerSum) {}
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero(Basis b = Basis::PowerSum) { return SymFunc(b); }
    static SymFunc one(Basis b = Basis::PowerSum);
    static SymFunc basis_element(Basis b, const Partition& lam, const Rational& c = Rational(1));

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // largest term weight; 0 for zero or constants
    Rational coeff(const Partition& lam) const;

    // Accumulates c into the lam term, dropping the term if it cancels.
    SymFunc& add_term(const Partition& lam, const Rational& c);

    // Terms of one weight only, same basis.
    SymFunc homogeneous_component(int d) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rational& c);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator-(const SymFunc& a);
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }

    // Product of symmetric functions; see sym_mul.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

    // Mathematical equality (compares in the power-sum basis when tags differ).
    friend bool operator==(const SymFunc& a, const SymFunc& b);
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    // Human-readable form, e.g. "2*p[2,1] + 1/2*p[1]"; "0" when zero.
    std::string str() const;

private:
    Basis basis_;
    TermMap terms_;
};

// Exact change of basis. Routes: Newton identities between power sums and h/e;
// Jacobi-Trudi determinants take Schur to h; Kostka numbers give the triangular
// relation between Schur and monomial; power sums expand into monomials by the
// m_lambda * p_r product rule, and the reverse direction is a triangular solve
// against those expansions.
SymFunc to_basis(const SymFunc& f, Basis target);

// Product, computed and returned in the power-sum basis.
SymFunc sym_mul(const SymFunc& f, const SymFunc& g);
SymFunc sym_pow(const SymFunc& f, int k);

// Degree-scaling ring endomorphism: on power sums, p_lambda -> p_{r*lambda}.
// chi(f,1) = f and chi(chi(f,r),s) = chi(f,rs). Result in power-sum basis.
SymFunc chi(const SymFunc& f, int r);

// Value of f at n ones (dimension of the underlying GL_n module when f is a
// character restricted to n variables): p_lambda(1^n) = n^length(lambda).
Rational eval_dim(const SymFunc& f, int n);

// Drops monomial terms needing more than n variables; result in monomial basis.
SymFunc restrict_vars(const SymFunc& f, int n);

// First Schur term with a negative or non-integer coefficient, if any.
std::optional<std::pair<Partition, Rational>> schur_negativity_witness(const SymFunc& f);
bool is_schur_positive(const SymFunc& f);

// True when every monomial-basis coefficient is an integer (membership in the
// integral lattice spanned by the monomial functions).
bool has_integral_monomial_coeffs(const SymFunc& f);

// Kostka number: semistandard tableaux of the given shape and content.
long long kostka_number(const Partition& shape, const Partition& content);

// Carrier hooks used by the truncated-series layer.
inline SymFunc zero_like(const SymFunc& f) { return SymFunc::zero(f.basis()); }
inline SymFunc one_like(const SymFunc& f) { return SymFunc::one(f.basis()); }

} // namespace liewb
