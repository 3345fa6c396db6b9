#include "liewb/symfunc.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <set>
#include <unordered_map>

namespace liewb {

char basis_char(Basis b) { return static_cast<char>(b); }

Basis basis_from_char(char c) {
    switch (c) {
        case 'p': return Basis::PowerSum;
        case 'm': return Basis::Monomial;
        case 'h': return Basis::Homogeneous;
        case 'e': return Basis::Elementary;
        case 's': return Basis::Schur;
        default: throw DomainError(std::string("unknown basis '") + c + "'");
    }
}

SymFunc SymFunc::one(Basis b) {
    SymFunc f(b);
    f.add_term(Partition{}, Rational(1));
    return f;
}

SymFunc SymFunc::basis_element(Basis b, const Partition& lam, const Rational& c) {
    SymFunc f(b);
    f.add_term(lam, c);
    return f;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [lam, c] : terms_) d = std::max(d, lam.weight());
    return d;
}

Rational SymFunc::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rational(0) : it->second;
}

SymFunc& SymFunc::add_term(const Partition& lam, const Rational& c) {
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.try_emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

SymFunc SymFunc::homogeneous_component(int d) const {
    SymFunc out(basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.weight() == d) out.add_term(lam, c);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw DomainError("SymFunc: mixed-basis addition; convert explicitly");
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw DomainError("SymFunc: mixed-basis subtraction; convert explicitly");
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, v] : terms_) v *= c;
    return *this;
}

SymFunc operator-(const SymFunc& a) {
    SymFunc out(a.basis());
    for (const auto& [lam, c] : a.terms()) out.add_term(lam, -c);
    return out;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lam, c] : terms_) {
        Rational a = c;
        if (s.empty()) {
            if (a.sign() < 0) { s += "-"; a = -a; }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        if (a != Rational(1)) s += a.str() + "*";
        s += basis_char(basis_);
        s += lam.str();
    }
    return s;
}

namespace {

// Product of two elements of the same multiplicative basis (p, h or e), where
// basis elements multiply by merging their index partitions.
SymFunc mul_multiplicative(const SymFunc& a, const SymFunc& b) {
    SymFunc out(a.basis());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            out.add_term(la.merged(lb), ca * cb);
    return out;
}

// Multiply an element written in the monomial basis by the power sum p_r.
// m_mu * p_r = sum over mu' obtained from mu by adding r to one part value or
// appending a new part r; the coefficient of m_mu' counts the positions of mu'
// from which removing r recovers mu.
SymFunc monomial_times_powersum(const SymFunc& f, int r) {
    SymFunc out(Basis::Monomial);
    for (const auto& [mu, c] : f.terms()) {
        std::set<std::vector<int>> candidates;
        {
            std::vector<int> v = mu.parts();
            v.push_back(r);
            std::sort(v.begin(), v.end(), std::greater<int>());
            candidates.insert(v);
        }
        std::set<int> seen;
        for (size_t i = 0; i < mu.parts().size(); ++i) {
            int val = mu.parts()[i];
            if (!seen.insert(val).second) continue;
            std::vector<int> v = mu.parts();
            v[i] += r;
            std::sort(v.begin(), v.end(), std::greater<int>());
            candidates.insert(v);
        }
        for (const auto& cand : candidates) {
            Partition mup{std::vector<int>(cand)};
            long long count = 0;
            std::set<int> vals;
            for (int w : cand) {
                if (w < r || !vals.insert(w).second) continue;
                std::vector<int> rem;
                bool removed = false;
                for (int x : cand) {
                    if (!removed && x == w) {
                        removed = true;
                        if (w > r) rem.push_back(w - r);
                        continue;
                    }
                    rem.push_back(x);
                }
                if (Partition(std::move(rem)) == mu) count += mup.multiplicity(w);
            }
            if (count) out.add_term(mup, c * Rational(count));
        }
    }
    return out;
}

// Memoized expansion tables. One coarse lock; the fill routines only touch
// their own table, so no call below ever re-enters the lock.
class Tables {
public:
    // h_n written in the power-sum basis: h_n = (1/n) sum_i p_i h_{n-i}.
    SymFunc h_in_p(int n) {
        std::scoped_lock lk(mu_);
        if (h_in_p_.empty()) h_in_p_.push_back(SymFunc::one(Basis::PowerSum));
        while (static_cast<int>(h_in_p_.size()) <= n) step_newton(h_in_p_, false);
        return h_in_p_[n];
    }

    // e_n in power sums: e_n = (1/n) sum_i (-1)^{i-1} p_i e_{n-i}.
    SymFunc e_in_p(int n) {
        std::scoped_lock lk(mu_);
        if (e_in_p_.empty()) e_in_p_.push_back(SymFunc::one(Basis::PowerSum));
        while (static_cast<int>(e_in_p_.size()) <= n) step_newton(e_in_p_, true);
        return e_in_p_[n];
    }

    // p_n in the h basis: p_n = n h_n - sum_{i<n} p_i h_{n-i}.
    SymFunc p_in_h(int n) {
        std::scoped_lock lk(mu_);
        if (p_in_h_.empty()) p_in_h_.push_back(SymFunc::one(Basis::Homogeneous));
        while (static_cast<int>(p_in_h_.size()) <= n) {
            int k = static_cast<int>(p_in_h_.size());
            SymFunc acc = SymFunc::basis_element(Basis::Homogeneous, Partition::single(k),
                                                 Rational(k));
            for (int i = 1; i < k; ++i) {
                SymFunc h1 = SymFunc::basis_element(Basis::Homogeneous, Partition::single(k - i));
                acc -= mul_multiplicative(p_in_h_[i], h1);
            }
            p_in_h_.push_back(acc);
        }
        return p_in_h_[n];
    }

    // p_n in the e basis: p_n = (-1)^{n-1} (n e_n - sum_{i<n} (-1)^{i-1} p_i e_{n-i}).
    SymFunc p_in_e(int n) {
        std::scoped_lock lk(mu_);
        if (p_in_e_.empty()) p_in_e_.push_back(SymFunc::one(Basis::Elementary));
        while (static_cast<int>(p_in_e_.size()) <= n) {
            int k = static_cast<int>(p_in_e_.size());
            SymFunc acc = SymFunc::basis_element(Basis::Elementary, Partition::single(k),
                                                 Rational(k));
            for (int i = 1; i < k; ++i) {
                SymFunc e1 = SymFunc::basis_element(Basis::Elementary, Partition::single(k - i));
                SymFunc t = mul_multiplicative(p_in_e_[i], e1);
                acc -= (i % 2 == 1) ? t : -t;
            }
            if (k % 2 == 0) acc *= Rational(-1);
            p_in_e_.push_back(acc);
        }
        return p_in_e_[n];
    }

    // p_lambda expanded in the monomial basis, by iterated power-sum products.
    SymFunc powersum_in_monomial(const Partition& lam) {
        std::scoped_lock lk(mu_);
        auto it = p_in_m_.find(lam.parts());
        if (it != p_in_m_.end()) return it->second;
        SymFunc acc = SymFunc::one(Basis::Monomial);
        for (int r : lam.parts()) acc = monomial_times_powersum(acc, r);
        p_in_m_.emplace(lam.parts(), acc);
        return acc;
    }

    // s_lambda in the h basis via the Jacobi-Trudi determinant det(h_{lam_i - i + j}).
    SymFunc schur_in_h(const Partition& lam) {
        std::scoped_lock lk(mu_);
        auto it = s_in_h_.find(lam.parts());
        if (it != s_in_h_.end()) return it->second;
        int l = lam.length();
        std::unordered_map<uint32_t, SymFunc> memo;
        auto det = [&](auto&& self, uint32_t mask) -> SymFunc {
            if (mask == 0) return SymFunc::one(Basis::Homogeneous);
            auto mit = memo.find(mask);
            if (mit != memo.end()) return mit->second;
            int row = l - std::popcount(mask);
            SymFunc acc(Basis::Homogeneous);
            int pos = 0;
            for (int c = 0; c < l; ++c) {
                if (!(mask & (1u << c))) continue;
                int v = lam.parts()[row] - row + c;
                int sign = (pos % 2 == 0) ? 1 : -1;
                ++pos;
                if (v < 0) continue;
                SymFunc sub = self(self, mask & ~(1u << c));
                if (v > 0)
                    sub = mul_multiplicative(
                        SymFunc::basis_element(Basis::Homogeneous, Partition::single(v)), sub);
                acc += sign == 1 ? sub : -sub;
            }
            memo.emplace(mask, acc);
            return acc;
        };
        if (l >= 32) throw DomainError("schur_in_h: partition longer than 31 parts");
        SymFunc result =
            l == 0 ? SymFunc::one(Basis::Homogeneous) : det(det, (1u << l) - 1u);
        s_in_h_.emplace(lam.parts(), result);
        return result;
    }

    // s_mu in the monomial basis: Kostka row over all partitions of |mu|.
    SymFunc schur_in_m(const Partition& mu) {
        std::scoped_lock lk(mu_);
        auto it = s_in_m_.find(mu.parts());
        if (it != s_in_m_.end()) return it->second;
        SymFunc acc(Basis::Monomial);
        for (const Partition& lam : partitions_of(mu.weight())) {
            if (!mu.dominates(lam)) continue;
            long long k = kostka_locked(mu, lam);
            if (k) acc.add_term(lam, Rational(k));
        }
        s_in_m_.emplace(mu.parts(), acc);
        return acc;
    }

    long long kostka(const Partition& shape, const Partition& content) {
        std::scoped_lock lk(mu_);
        return kostka_locked(shape, content);
    }

private:
    // One Newton step shared by the h and e tables (e alternates signs).
    static void step_newton(std::vector<SymFunc>& table, bool alternating) {
        int k = static_cast<int>(table.size());
        SymFunc acc(Basis::PowerSum);
        for (int i = 1; i <= k; ++i) {
            SymFunc pi = SymFunc::basis_element(Basis::PowerSum, Partition::single(i));
            SymFunc t = mul_multiplicative(pi, table[k - i]);
            if (alternating && i % 2 == 0) t *= Rational(-1);
            acc += t;
        }
        acc *= Rational(1, k);
        table.push_back(acc);
    }

    long long kostka_locked(const Partition& shape, const Partition& content) {
        if (shape.weight() != content.weight()) return 0;
        if (!shape.dominates(content)) return 0;
        auto key = std::make_pair(shape.parts(), content.parts());
        auto it = kostka_.find(key);
        if (it != kostka_.end()) return it->second;
        long long result;
        if (content.length() == 0) {
            result = shape.length() == 0 ? 1 : 0;
        } else {
            // Cells holding the largest letter form a horizontal strip shape/nu.
            int strip = content.parts().back();
            Partition rest{std::vector<int>(content.parts().begin(),
                                            content.parts().end() - 1)};
            result = 0;
            std::vector<int> nu;
            auto rec = [&](auto&& self, int row, int left) -> void {
                if (row == shape.length()) {
                    if (left != 0) return;
                    std::vector<int> nz;
                    for (int x : nu)
                        if (x > 0) nz.push_back(x);
                    result += kostka_locked(Partition(std::move(nz)), rest);
                    return;
                }
                int hi = shape.parts()[row];
                int lo = row + 1 < shape.length() ? shape.parts()[row + 1] : 0;
                for (int v = hi; v >= lo && hi - v <= left; --v) {
                    nu.push_back(v);
                    self(self, row + 1, left - (hi - v));
                    nu.pop_back();
                }
            };
            rec(rec, 0, strip);
        }
        kostka_.emplace(key, result);
        return result;
    }

    std::mutex mu_;
    std::vector<SymFunc> h_in_p_, e_in_p_, p_in_h_, p_in_e_;
    std::map<std::vector<int>, SymFunc> p_in_m_, s_in_h_, s_in_m_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> kostka_;
};

Tables& tables() {
    static Tables t;
    return t;
}

// Expands one multiplicative-basis term (product over parts of the generator
// expansion) into the power-sum basis.
SymFunc generators_to_p(const Partition& lam, const Rational& c,
                        SymFunc (Tables::*gen)(int)) {
    SymFunc acc = SymFunc::one(Basis::PowerSum) * c;
    for (int part : lam.parts()) acc = mul_multiplicative(acc, (tables().*gen)(part));
    return acc;
}

SymFunc monomial_to_power_sum(const SymFunc& f);

SymFunc to_power_sum(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::PowerSum:
            return f;
        case Basis::Homogeneous: {
            SymFunc out(Basis::PowerSum);
            for (const auto& [lam, c] : f.terms())
                out += generators_to_p(lam, c, &Tables::h_in_p);
            return out;
        }
        case Basis::Elementary: {
            SymFunc out(Basis::PowerSum);
            for (const auto& [lam, c] : f.terms())
                out += generators_to_p(lam, c, &Tables::e_in_p);
            return out;
        }
        case Basis::Schur: {
            SymFunc in_h(Basis::Homogeneous);
            for (const auto& [lam, c] : f.terms()) in_h += tables().schur_in_h(lam) * c;
            return to_power_sum(in_h);
        }
        case Basis::Monomial:
            return monomial_to_power_sum(f);
    }
    throw InternalError("to_power_sum: unreachable basis");
}

// Triangular peel of a monomial-basis element against the p_lambda expansions.
// Within each weight, partitions are processed in ascending lexicographic order;
// p_mu contributes to m_nu only for nu dominating (hence lex >=) mu, so at the
// lex-least remaining term the only unexplained contribution is p of that index.
SymFunc monomial_to_power_sum(const SymFunc& f) {
    std::map<int, SymFunc::TermMap> by_weight;
    for (const auto& [lam, c] : f.terms()) by_weight[lam.weight()][lam] = c;
    SymFunc out(Basis::PowerSum);
    for (auto& [d, residual] : by_weight) {
        while (!residual.empty()) {
            auto it = std::prev(residual.end());  // lex-least remaining
            Partition mu = it->first;
            Rational r = it->second;
            residual.erase(it);
            SymFunc row = tables().powersum_in_monomial(mu);
            Rational diag = row.coeff(mu);
            if (diag.is_zero()) throw InternalError("monomial_to_power_sum: zero diagonal");
            Rational x = r / diag;
            out.add_term(mu, x);
            for (const auto& [nu, q] : row.terms()) {
                if (nu == mu) continue;
                auto [rit, fresh] = residual.try_emplace(nu, Rational(0));
                rit->second -= x * q;
                if (rit->second.is_zero()) residual.erase(rit);
            }
        }
    }
    return out;
}

// Triangular peel of a monomial-basis element into Schur functions. Kostka
// matrices are unitriangular against dominance, which descending lexicographic
// order refines, so a forward sweep peels one Schur term per step.
SymFunc monomial_to_schur(const SymFunc& f) {
    std::map<int, SymFunc::TermMap> by_weight;
    for (const auto& [lam, c] : f.terms()) by_weight[lam.weight()][lam] = c;
    SymFunc out(Basis::Schur);
    for (auto& [d, residual] : by_weight) {
        while (!residual.empty()) {
            auto it = residual.begin();  // lex-greatest remaining
            Partition mu = it->first;
            Rational coeff = it->second;
            residual.erase(it);
            out.add_term(mu, coeff);
            SymFunc row = tables().schur_in_m(mu);
            for (const auto& [nu, q] : row.terms()) {
                if (nu == mu) continue;
                auto [rit, fresh] = residual.try_emplace(nu, Rational(0));
                rit->second -= coeff * q;
                if (rit->second.is_zero()) residual.erase(rit);
            }
        }
    }
    return out;
}

SymFunc power_sum_to_monomial(const SymFunc& f) {
    SymFunc out(Basis::Monomial);
    for (const auto& [lam, c] : f.terms()) out += tables().powersum_in_monomial(lam) * c;
    return out;
}

SymFunc from_power_sum(const SymFunc& f, Basis target) {
    switch (target) {
        case Basis::PowerSum:
            return f;
        case Basis::Homogeneous: {
            SymFunc out(Basis::Homogeneous);
            for (const auto& [lam, c] : f.terms()) {
                SymFunc acc = SymFunc::one(Basis::Homogeneous) * c;
                for (int part : lam.parts())
                    acc = mul_multiplicative(acc, tables().p_in_h(part));
                out += acc;
            }
            return out;
        }
        case Basis::Elementary: {
            SymFunc out(Basis::Elementary);
            for (const auto& [lam, c] : f.terms()) {
                SymFunc acc = SymFunc::one(Basis::Elementary) * c;
                for (int part : lam.parts())
                    acc = mul_multiplicative(acc, tables().p_in_e(part));
                out += acc;
            }
            return out;
        }
        case Basis::Monomial:
            return power_sum_to_monomial(f);
        case Basis::Schur:
            return monomial_to_schur(power_sum_to_monomial(f));
    }
    throw InternalError("from_power_sum: unreachable basis");
}

} // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return from_power_sum(to_power_sum(f), target);
}

SymFunc sym_mul(const SymFunc& f, const SymFunc& g) {
    return mul_multiplicative(to_power_sum(f), to_power_sum(g));
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return sym_mul(a, b); }

SymFunc sym_pow(const SymFunc& f, int k) {
    if (k < 0) throw DomainError("sym_pow: negative exponent");
    SymFunc acc = SymFunc::one(Basis::PowerSum);
    SymFunc base = to_power_sum(f);
    for (int i = 0; i < k; ++i) acc = mul_multiplicative(acc, base);
    return acc;
}

SymFunc chi(const SymFunc& f, int r) {
    if (r < 1) throw DomainError("chi: index must be >= 1");
    SymFunc out(Basis::PowerSum);
    const SymFunc fp = to_power_sum(f);
    for (const auto& [lam, c] : fp.terms()) out.add_term(lam.scaled(r), c);
    return out;
}

Rational eval_dim(const SymFunc& f, int n) {
    if (n < 0) throw DomainError("eval_dim: negative variable count");
    Rational acc(0);
    const SymFunc fp = to_power_sum(f);
    for (const auto& [lam, c] : fp.terms())
        acc += c * Rational::pow(Rational(n), lam.length());
    return acc;
}

SymFunc restrict_vars(const SymFunc& f, int n) {
    if (n < 0) throw DomainError("restrict_vars: negative variable count");
    SymFunc out(Basis::Monomial);
    const SymFunc fm = to_basis(f, Basis::Monomial);
    for (const auto& [lam, c] : fm.terms())
        if (lam.length() <= n) out.add_term(lam, c);
    return out;
}

std::optional<std::pair<Partition, Rational>> schur_negativity_witness(const SymFunc& f) {
    const SymFunc fs = to_basis(f, Basis::Schur);
    for (const auto& [lam, c] : fs.terms())
        if (!c.is_nonneg_integer()) return std::make_pair(lam, c);
    return std::nullopt;
}

bool is_schur_positive(const SymFunc& f) { return !schur_negativity_witness(f).has_value(); }

bool has_integral_monomial_coeffs(const SymFunc& f) {
    const SymFunc fm = to_basis(f, Basis::Monomial);
    for (const auto& [lam, c] : fm.terms())
        if (!c.is_integer()) return false;
    return true;
}

long long kostka_number(const Partition& shape, const Partition& content) {
    return tables().kostka(shape, content);
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.basis() == b.basis()) return a.terms() == b.terms();
    return to_power_sum(a).terms() == to_power_sum(b).terms();
}

} // namespace liewb
