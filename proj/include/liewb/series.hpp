#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "liewb/errors.hpp"
#include "liewb/rational.hpp"

namespace liewb {

// A component family assigns to each index r >= 1 a Q-linear self-map of the
// coefficient carrier. Index 1 must act as the identity. Carriers supply their
// own families (the degree-scaling endomorphisms on characters; the Adams and
// resolvent operations on the Green ring).
template <typename Elem>
using ComponentFamily = std::function<Elem(int, const Elem&)>;

// Power series in t over an exact commutative Q-algebra, truncated at degree D:
// exactly the coefficients of t^0..t^D are stored. Mixed-truncation arithmetic
// truncates to the smaller D. The carrier element type must provide +, -, *,
// scalar multiplication by Rational, equality, and ADL-findable zero_like /
// one_like (zero and one of the carrier, matched to the element's context).
template <typename Elem>
class TruncSeries {
public:
    TruncSeries(int D, const Elem& zero) : c_(static_cast<size_t>(check(D)) + 1, zero) {}

    static TruncSeries from_coeffs(int D, std::vector<Elem> coeffs) {
        if (static_cast<int>(coeffs.size()) != D + 1)
            throw DomainError("TruncSeries: need exactly D+1 coefficients");
        TruncSeries s(D, zero_like(coeffs[0]));
        s.c_ = std::move(coeffs);
        return s;
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }

    const Elem& coeff(int r) const {
        if (r < 0 || r > truncation()) throw DomainError("TruncSeries::coeff: index out of range");
        return c_[static_cast<size_t>(r)];
    }

    void set_coeff(int r, const Elem& v) {
        if (r < 0 || r > truncation())
            throw DomainError("TruncSeries::set_coeff: index out of range");
        c_[static_cast<size_t>(r)] = v;
    }

    Elem zero_coeff() const { return zero_like(c_[0]); }
    Elem one_coeff() const { return one_like(c_[0]); }

    bool in_t_region() const { return c_[0] == zero_coeff(); }       // no constant term
    bool in_one_plus_t_region() const { return c_[0] == one_coeff(); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(std::min(a.truncation(), b.truncation()), a.zero_coeff());
        for (int r = 0; r <= out.truncation(); ++r) out.c_[r] = a.c_[r] + b.c_[r];
        return out;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(std::min(a.truncation(), b.truncation()), a.zero_coeff());
        for (int r = 0; r <= out.truncation(); ++r) out.c_[r] = a.c_[r] - b.c_[r];
        return out;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(std::min(a.truncation(), b.truncation()), a.zero_coeff());
        for (int i = 0; i <= out.truncation(); ++i) {
            if (a.c_[i] == a.zero_coeff()) continue;
            for (int j = 0; i + j <= out.truncation(); ++j)
                out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return out;
    }
    friend TruncSeries operator*(const TruncSeries& a, const Rational& q) {
        TruncSeries out = a;
        for (auto& x : out.c_) x = x * q;
        return out;
    }
    friend TruncSeries operator*(const Rational& q, const TruncSeries& a) { return a * q; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    static int check(int D) {
        if (D < 0) throw DomainError("TruncSeries: negative truncation degree");
        return D;
    }
    std::vector<Elem> c_;
};

// exp(f) = 1 + f + f^2/2! + ...; requires zero constant term.
template <typename Elem>
TruncSeries<Elem> series_exp(const TruncSeries<Elem>& f) {
    if (!f.in_t_region()) throw DomainError("series_exp: input must have zero constant term");
    int D = f.truncation();
    TruncSeries<Elem> out(D, f.zero_coeff());
    out.set_coeff(0, f.one_coeff());
    TruncSeries<Elem> term(D, f.zero_coeff());
    term.set_coeff(0, f.one_coeff());
    for (int k = 1; k <= D; ++k) {
        term = term * f * Rational(1, k);
        out = out + term;
    }
    return out;
}

// log(g) for g with constant term one: sum (-1)^{k-1} (g-1)^k / k.
template <typename Elem>
TruncSeries<Elem> series_log(const TruncSeries<Elem>& g) {
    if (!g.in_one_plus_t_region())
        throw DomainError("series_log: input must have constant term one");
    int D = g.truncation();
    TruncSeries<Elem> u = g;
    u.set_coeff(0, g.zero_coeff());
    TruncSeries<Elem> out(D, g.zero_coeff());
    TruncSeries<Elem> upow(D, g.zero_coeff());
    upow.set_coeff(0, g.one_coeff());
    for (int k = 1; k <= D; ++k) {
        upow = upow * u;
        out = out + upow * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return out;
}

// Modified exponential Exp(f) = 1 - exp(-f); maps the t-region to itself.
template <typename Elem>
TruncSeries<Elem> series_Exp(const TruncSeries<Elem>& f) {
    if (!f.in_t_region()) throw DomainError("series_Exp: input must have zero constant term");
    TruncSeries<Elem> e = series_exp(f * Rational(-1));
    TruncSeries<Elem> out(f.truncation(), f.zero_coeff());
    for (int r = 0; r <= f.truncation(); ++r)
        out.set_coeff(r, (r == 0 ? e.one_coeff() : e.zero_coeff()) - e.coeff(r));
    return out;
}

// Modified logarithm Log(f) = -log(1-f) = sum f^k / k; inverse to Exp on the
// t-region.
template <typename Elem>
TruncSeries<Elem> series_Log(const TruncSeries<Elem>& f) {
    if (!f.in_t_region()) throw DomainError("series_Log: input must have zero constant term");
    int D = f.truncation();
    TruncSeries<Elem> out(D, f.zero_coeff());
    TruncSeries<Elem> fpow(D, f.zero_coeff());
    fpow.set_coeff(0, f.one_coeff());
    for (int k = 1; k <= D; ++k) {
        fpow = fpow * f;
        out = out + fpow * Rational(1, k);
    }
    return out;
}

// Substitution t -> t^r; coefficients pushed past the truncation are dropped.
template <typename Elem>
TruncSeries<Elem> subst_power(const TruncSeries<Elem>& f, int r) {
    if (r < 1) throw DomainError("subst_power: exponent must be >= 1");
    int D = f.truncation();
    TruncSeries<Elem> out(D, f.zero_coeff());
    for (int j = 0; j * r <= D; ++j) out.set_coeff(j * r, f.coeff(j));
    return out;
}

// The divisor-sum lift of a component family: output coefficient at t^r is
// sum over d | r of (1/d) * family_d(coefficient at t^{r/d}). Q-linear in the
// input and compatible with substitution t -> t^m for m coprime patterns; this
// is the shared skeleton of the star and script operators below.
template <typename Elem>
TruncSeries<Elem> plus_op(const TruncSeries<Elem>& f, const ComponentFamily<Elem>& family) {
    if (!f.in_t_region()) throw DomainError("plus_op: input must have zero constant term");
    int D = f.truncation();
    TruncSeries<Elem> out(D, f.zero_coeff());
    for (int r = 1; r <= D; ++r) {
        Elem acc = f.zero_coeff();
        for (int d = 1; d <= r; ++d) {
            if (r % d) continue;
            acc = acc + family(d, f.coeff(r / d)) * Rational(1, d);
        }
        out.set_coeff(r, acc);
    }
    return out;
}

// Symmetric-power style operator: exp after the divisor-sum lift of the Adams
// family. Takes the t-region into the 1+t region.
template <typename Elem>
TruncSeries<Elem> star_S(const TruncSeries<Elem>& f, const ComponentFamily<Elem>& adams) {
    return series_exp(plus_op(f, adams));
}

// Lie-power style operator: divisor-sum lift of the resolvent family after log.
// Takes the 1+t region into the t-region.
template <typename Elem>
TruncSeries<Elem> star_L(const TruncSeries<Elem>& g, const ComponentFamily<Elem>& resolvent) {
    return plus_op(series_log(g), resolvent);
}

// Lie operator on the t-region: divisor-sum lift of the resolvent family after
// the modified logarithm. On a one-term series V t it reproduces the Lie powers
// of V degree by degree.
template <typename Elem>
TruncSeries<Elem> script_L(const TruncSeries<Elem>& f, const ComponentFamily<Elem>& resolvent) {
    return plus_op(series_Log(f), resolvent);
}

inline bool is_prime_power_of(int r, int p) {
    if (r < 1) return false;
    while (r % p == 0) r /= p;
    return r == 1;
}

// First index 1 <= r <= D that is not a power of p but has a nonzero
// coefficient; nullopt when the series is p-typical.
template <typename Elem>
std::optional<int> p_typicality_witness(const TruncSeries<Elem>& f, int p) {
    if (p < 2) throw DomainError("p_typicality_witness: p must be >= 2");
    for (int r = 1; r <= f.truncation(); ++r)
        if (!is_prime_power_of(r, p) && !(f.coeff(r) == f.zero_coeff())) return r;
    return std::nullopt;
}

template <typename Elem>
bool is_p_typical(const TruncSeries<Elem>& f, int p) {
    return !p_typicality_witness(f, p).has_value();
}

} // namespace liewb
