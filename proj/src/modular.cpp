#include "liewb/modular.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "liewb/lyndon.hpp"
#include "liewb/numtheory.hpp"

namespace liewb {

MatRep make_rep(int p, FpMat g) {
    if (g.p() != p) throw InvalidRep("make_rep: matrix modulus does not match p");
    if (g.rows() != g.cols()) throw InvalidRep("make_rep: generator matrix must be square");
    if (!g.pow(p).is_identity())
        throw InvalidRep("make_rep: generator does not have order dividing p");
    return MatRep{p, std::move(g)};
}

MatRep jordan_block_rep(int p, int b) {
    if (!is_prime(p)) throw DomainError("jordan_block_rep: p must be prime");
    if (b < 1 || b > p) throw DomainError("jordan_block_rep: block size must be in [1, p]");
    FpMat g = FpMat::identity(p, b);
    for (int i = 0; i + 1 < b; ++i) g.set(i + 1, i, 1);
    return MatRep{p, std::move(g)};
}

MatRep direct_sum(const MatRep& a, const MatRep& b) {
    if (a.p != b.p) throw DomainError("direct_sum: prime mismatch");
    return MatRep{a.p, FpMat::block_diag(a.g, b.g)};
}

MatRep tensor(const MatRep& a, const MatRep& b) {
    if (a.p != b.p) throw DomainError("tensor: prime mismatch");
    return MatRep{a.p, FpMat::kronecker(a.g, b.g)};
}

const Rational& GreenElement::coord(int b) const {
    if (b < 1 || b > p) throw DomainError("GreenElement::coord: index out of range");
    return coords[static_cast<size_t>(b - 1)];
}

bool GreenElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

std::string GreenElement::str() const {
    std::string s;
    for (int b = p; b >= 1; --b) {
        const Rational& c = coords[static_cast<size_t>(b - 1)];
        if (c.is_zero()) continue;
        std::string abs = (c.sign() < 0 ? (-c).str() : c.str());
        std::string term = (abs == "1" ? "" : abs + "*") + "J" + std::to_string(b);
        if (s.empty())
            s = (c.sign() < 0 ? "-" : "") + term;
        else
            s += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

namespace {

void check_same_ring(const GreenElement& a, const GreenElement& b, const char* who) {
    if (a.p != b.p || a.coords.size() != b.coords.size())
        throw DomainError(std::string(who) + ": elements of different Green rings");
}

} // namespace

GreenElement& GreenElement::operator+=(const GreenElement& o) {
    check_same_ring(*this, o, "GreenElement::+");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& o) {
    check_same_ring(*this, o, "GreenElement::-");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

GreenElement& GreenElement::operator*=(const Rational& c) {
    for (auto& x : coords) x *= c;
    return *this;
}

GreenElement green_zero(int p) {
    if (!is_prime(p)) throw DomainError("green_zero: p must be prime");
    GreenElement x;
    x.p = p;
    x.coords.assign(static_cast<size_t>(p), Rational(0));
    return x;
}

GreenElement green_one(int p) { return green_jordan(p, 1); }

GreenElement green_jordan(int p, int b) {
    GreenElement x = green_zero(p);
    if (b < 1 || b > p) throw DomainError("green_jordan: block size must be in [1, p]");
    x.coords[static_cast<size_t>(b - 1)] = Rational(1);
    return x;
}

Rational green_dim(const GreenElement& x) {
    Rational d(0);
    for (int b = 1; b <= x.p; ++b) d += Rational(b) * x.coord(b);
    return d;
}

bool is_actual_module(const GreenElement& x) {
    return std::all_of(x.coords.begin(), x.coords.end(),
                       [](const Rational& c) { return c.is_nonneg_integer(); });
}

GreenElement jordan_type(const MatRep& rep) {
    if (rep.g.p() != rep.p) throw InvalidRep("jordan_type: matrix modulus does not match p");
    if (rep.g.rows() != rep.g.cols()) throw InvalidRep("jordan_type: generator must be square");
    int p = rep.p, n = rep.dim();
    FpMat N = rep.g - FpMat::identity(p, n);
    // ranks[s] = rank of N^s; a valid generator has N^p = 0.
    std::vector<long long> ranks(static_cast<size_t>(p) + 2, 0);
    ranks[0] = n;
    FpMat Ns = N;
    for (int s = 1; s <= p && ranks[static_cast<size_t>(s - 1)] > 0; ++s) {
        if (s > 1) Ns = Ns * N;
        ranks[static_cast<size_t>(s)] = Ns.rank();
    }
    if (ranks[static_cast<size_t>(p)] != 0)
        throw InvalidRep("jordan_type: generator minus identity is not nilpotent of index <= p");
    GreenElement out = green_zero(p);
    long long total = 0;
    for (int b = 1; b <= p; ++b) {
        long long cnt = ranks[static_cast<size_t>(b - 1)] - 2 * ranks[static_cast<size_t>(b)] +
                        ranks[static_cast<size_t>(b + 1)];
        if (cnt < 0) throw InternalError("jordan_type: negative block count");
        out.coords[static_cast<size_t>(b - 1)] = Rational(cnt);
        total += cnt * b;
    }
    if (total != n) throw InternalError("jordan_type: block sizes do not add up");
    return out;
}

namespace {

// Structure constants of the Green ring: the class of J_a (x) J_b, cached per
// (p, a, b). Computed once from an explicit Kronecker product.
const GreenElement& jordan_product_class(int p, int a, int b) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, GreenElement> cache;
    if (a > b) std::swap(a, b);
    std::scoped_lock lk(mu);
    auto key = std::make_tuple(p, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) {
        MatRep t = tensor(jordan_block_rep(p, a), jordan_block_rep(p, b));
        it = cache.emplace(key, jordan_type(t)).first;
    }
    return it->second;
}

} // namespace

GreenElement operator*(const GreenElement& a, const GreenElement& b) {
    check_same_ring(a, b, "GreenElement::*");
    GreenElement out = green_zero(a.p);
    for (int i = 1; i <= a.p; ++i) {
        if (a.coord(i).is_zero()) continue;
        for (int j = 1; j <= b.p; ++j) {
            if (b.coord(j).is_zero()) continue;
            out += jordan_product_class(a.p, i, j) * (a.coord(i) * b.coord(j));
        }
    }
    return out;
}

GreenElement green_pow(const GreenElement& x, int k) {
    if (k < 0) throw DomainError("green_pow: negative exponent");
    GreenElement acc = green_one(x.p);
    for (int i = 0; i < k; ++i) acc = acc * x;
    return acc;
}

namespace {

using SparseVec = std::vector<std::pair<uint64_t, uint8_t>>;  // sorted by code

std::vector<std::vector<std::pair<int, uint8_t>>> sparse_columns(const FpMat& g) {
    std::vector<std::vector<std::pair<int, uint8_t>>> cols(static_cast<size_t>(g.cols()));
    for (int j = 0; j < g.cols(); ++j)
        for (int i = 0; i < g.rows(); ++i)
            if (uint8_t v = g.at(i, j)) cols[static_cast<size_t>(j)].emplace_back(i, v);
    return cols;
}

// dense += coeff * g^{(x) d} applied to the basis tensor e_code.
void apply_tensor(const std::vector<std::vector<std::pair<int, uint8_t>>>& cols, int n, int p,
                  int d, uint64_t code, uint8_t coeff, std::vector<uint8_t>& dense,
                  std::vector<int>& letters) {
    for (int i = d - 1; i >= 0; --i) {
        letters[static_cast<size_t>(i)] = static_cast<int>(code % static_cast<uint64_t>(n));
        code /= static_cast<uint64_t>(n);
    }
    auto rec = [&](auto&& self, int i, uint64_t partial, uint32_t pc) -> void {
        if (i == d) {
            uint8_t& cell = dense[partial];
            cell = static_cast<uint8_t>((cell + pc) % static_cast<uint32_t>(p));
            return;
        }
        for (auto [row, val] : cols[static_cast<size_t>(letters[static_cast<size_t>(i)])])
            self(self, i + 1, partial * static_cast<uint64_t>(n) + static_cast<uint64_t>(row),
                 pc * val % static_cast<uint32_t>(p));
    };
    rec(rec, 0, 0, coeff);
}

// Matrix of g on the span of sparse vectors inside the d-th tensor power. Each
// basis vector must have its least code as a pivot with coefficient 1; the
// image is expressed in the basis by an ascending sweep, eliminating pivots as
// they appear. Any residue off the pivot set means the span was not g-stable.
FpMat matrix_on_span(const MatRep& rep, int d, const std::vector<SparseVec>& basis,
                     long long space) {
    int p = rep.p, n = rep.dim();
    int W = static_cast<int>(basis.size());
    FpMat out(p, W, W);
    if (W == 0) return out;
    auto cols = sparse_columns(rep.g);
    std::unordered_map<uint64_t, int> pivot_index;
    pivot_index.reserve(static_cast<size_t>(W) * 2);
    for (int i = 0; i < W; ++i) {
        if (basis[static_cast<size_t>(i)].empty() ||
            basis[static_cast<size_t>(i)].front().second != 1)
            throw InternalError("matrix_on_span: basis vector lost its unit pivot");
        if (!pivot_index.emplace(basis[static_cast<size_t>(i)].front().first, i).second)
            throw InternalError("matrix_on_span: duplicate pivot");
    }
    std::vector<uint8_t> dense(static_cast<size_t>(space));
    std::vector<int> letters(static_cast<size_t>(d));
    for (int j = 0; j < W; ++j) {
        std::fill(dense.begin(), dense.end(), 0);
        for (auto [code, c] : basis[static_cast<size_t>(j)])
            apply_tensor(cols, n, p, d, code, c, dense, letters);
        for (uint64_t idx = 0; idx < static_cast<uint64_t>(space); ++idx) {
            uint8_t v = dense[idx];
            if (!v) continue;
            auto it = pivot_index.find(idx);
            if (it == pivot_index.end())
                throw InternalError("matrix_on_span: image leaves the spanned subspace");
            out.set(it->second, j, v);
            for (auto [code, c] : basis[static_cast<size_t>(it->second)]) {
                uint32_t sub = static_cast<uint32_t>(v) * c % static_cast<uint32_t>(p);
                uint8_t& cell = dense[code];
                cell = static_cast<uint8_t>((cell + static_cast<uint32_t>(p) - sub) %
                                            static_cast<uint32_t>(p));
            }
        }
    }
    return out;
}

long long tensor_space(int n, int d, long long budget) {
    long long space = 1;
    for (int i = 0; i < d; ++i) {
        space *= n;
        if (space > budget)
            throw BudgetExceeded("tensor power dimension " + std::to_string(n) + "^" +
                                 std::to_string(d) + " exceeds budget " + std::to_string(budget));
        if (space == 0) break;
    }
    return space;
}

SparseVec reduced_expansion(const LyndonEntry& e, int p) {
    SparseVec v;
    v.reserve(e.expansion.size());
    for (auto [code, c] : e.expansion) {
        long long r = c % p;
        if (r < 0) r += p;
        if (r) v.emplace_back(code, static_cast<uint8_t>(r));
    }
    return v;
}

// Concatenation product of sparse tensors of fixed lengths la and lb.
SparseVec concat_mul(const SparseVec& a, const SparseVec& b, int n, int lb, int p) {
    uint64_t shift = 1;
    for (int i = 0; i < lb; ++i) shift *= static_cast<uint64_t>(n);
    std::map<uint64_t, uint32_t> acc;
    for (auto [ca, xa] : a)
        for (auto [cb, xb] : b) acc[ca * shift + cb] += static_cast<uint32_t>(xa) * xb;
    SparseVec out;
    for (auto [code, x] : acc)
        if (uint8_t r = static_cast<uint8_t>(x % static_cast<uint32_t>(p))) out.emplace_back(code, r);
    return out;
}

} // namespace

FpMat lie_power_rep(const MatRep& rep, int d, long long tensor_budget) {
    if (d < 1) throw DomainError("lie_power_rep: degree must be >= 1");
    int n = rep.dim();
    long long space = tensor_space(n, d, tensor_budget);
    std::vector<SparseVec> basis;
    if (n > 0) {
        LyndonTable& table = lyndon_table(n);
        for (uint64_t w : lyndon_words(n, d))
            basis.push_back(reduced_expansion(table.entry(d, w), rep.p));
    }
    return matrix_on_span(rep, d, basis, space);
}

FpMat restricted_lie_power_rep(const MatRep& rep, int d, long long tensor_budget) {
    if (d < 1) throw DomainError("restricted_lie_power_rep: degree must be >= 1");
    int n = rep.dim(), p = rep.p;
    long long space = tensor_space(n, d, tensor_budget);
    std::vector<SparseVec> basis;
    if (n > 0) {
        LyndonTable& table = lyndon_table(n);
        int s_max = 0;
        for (int dd = d; dd % p == 0; dd /= p) ++s_max;
        // Ascending Lie degree d / p^s, i.e. s descending.
        for (int s = s_max; s >= 0; --s) {
            int l = d;
            for (int i = 0; i < s; ++i) l /= p;
            long long reps = ipow(p, s);
            for (uint64_t w : lyndon_words(n, l)) {
                SparseVec base = reduced_expansion(table.entry(l, w), p);
                SparseVec acc = {{0, 1}};  // empty word
                for (long long t = 0; t < reps; ++t) acc = concat_mul(acc, base, n, l, p);
                basis.push_back(std::move(acc));
            }
        }
    }
    return matrix_on_span(rep, d, basis, space);
}

MatRep sym_power_rep(const MatRep& rep, int r, long long tensor_budget) {
    if (r < 0) throw DomainError("sym_power_rep: negative degree");
    int n = rep.dim(), p = rep.p;
    // Basis: non-decreasing index tuples of length r.
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int lo, int rest) -> void {
        if (rest == 0) {
            if (static_cast<long long>(multisets.size()) >= tensor_budget)
                throw BudgetExceeded("sym_power_rep: basis larger than budget " +
                                     std::to_string(tensor_budget));
            multisets.push_back(cur);
            return;
        }
        for (int c = lo; c < n; ++c) {
            cur.push_back(c);
            self(self, c, rest - 1);
            cur.pop_back();
        }
    };
    gen(gen, 0, r);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < multisets.size(); ++i)
        index.emplace(multisets[i], static_cast<int>(i));

    int W = static_cast<int>(multisets.size());
    FpMat out(p, W, W);
    auto cols = sparse_columns(rep.g);
    for (int j = 0; j < W; ++j) {
        const std::vector<int>& ms = multisets[static_cast<size_t>(j)];
        // Expand the image product one factor at a time; partial products are
        // grouped by sorted multiset, which is sound because multiplication in
        // the symmetric algebra is commutative.
        std::map<std::vector<int>, uint32_t> acc;
        acc.emplace(std::vector<int>{}, 1u);
        for (int i = 0; i < r; ++i) {
            std::map<std::vector<int>, uint32_t> next;
            for (const auto& [part, c] : acc)
                for (auto [row, val] : cols[static_cast<size_t>(ms[static_cast<size_t>(i)])]) {
                    std::vector<int> key = part;
                    key.insert(std::upper_bound(key.begin(), key.end(), row), row);
                    uint32_t& cell = next[key];
                    cell = (cell + c * val) % static_cast<uint32_t>(p);
                }
            acc = std::move(next);
        }
        for (const auto& [key, c] : acc)
            if (c % static_cast<uint32_t>(p))
                out.set(index.at(key), j, c % static_cast<uint32_t>(p));
    }
    return MatRep{p, std::move(out)};
}

GreenRing::GreenRing(int p, long long tensor_budget) : p_(p), budget_(tensor_budget) {
    if (!is_prime(p)) throw DomainError("GreenRing: p must be prime");
    if (tensor_budget < 1) throw DomainError("GreenRing: budget must be positive");
}

GreenElement GreenRing::decompose(const MatRep& rep) const {
    if (rep.p != p_) throw DomainError("GreenRing::decompose: prime mismatch");
    return jordan_type(rep);
}

MatRep GreenRing::rep_of(const GreenElement& x) const {
    if (x.p != p_) throw DomainError("GreenRing::rep_of: prime mismatch");
    if (!is_actual_module(x))
        throw NegativeCoords("rep_of: " + x.str() + " is virtual, not an actual module");
    long long dim = 0;
    for (int b = 1; b <= p_; ++b) dim += b * x.coord(b).to_int();
    if (dim > budget_)
        throw BudgetExceeded("rep_of: module dimension " + std::to_string(dim) +
                             " exceeds budget " + std::to_string(budget_));
    FpMat g = FpMat::identity(p_, static_cast<int>(dim));
    int off = 0;
    for (int b = 1; b <= p_; ++b)
        for (long long c = 0; c < x.coord(b).to_int(); ++c) {
            for (int i = 0; i + 1 < b; ++i) g.set(off + i + 1, off + i, 1);
            off += b;
        }
    return MatRep{p_, std::move(g)};
}

std::vector<long long> GreenRing::actual_key(const GreenElement& x, const char* who) const {
    if (x.p != p_) throw DomainError(std::string(who) + ": prime mismatch");
    if (!is_actual_module(x))
        throw NegativeCoords(std::string(who) + ": " + x.str() +
                             " is virtual, not an actual module");
    std::vector<long long> key;
    key.reserve(x.coords.size());
    for (const auto& c : x.coords) key.push_back(c.to_int());
    return key;
}

GreenElement GreenRing::lie_power_class(const GreenElement& x, int d) {
    std::scoped_lock lk(mu_);
    return lie_power_class_locked(x, d);
}

GreenElement GreenRing::lie_power_class_locked(const GreenElement& x, int d) {
    if (d < 1) throw DomainError("lie_power_class: degree must be >= 1");
    if (d == 1) {
        if (x.p != p_) throw DomainError("lie_power_class: prime mismatch");
        return x;
    }
    auto key = std::make_pair(actual_key(x, "lie_power_class"), d);
    auto it = lie_cache_.find(key);
    if (it != lie_cache_.end()) return it->second;
    MatRep rep = rep_of(x);
    GreenElement out = jordan_type(MatRep{p_, lie_power_rep(rep, d, budget_)});
    lie_cache_.emplace(std::move(key), out);
    return out;
}

GreenElement GreenRing::restricted_lie_power_class(const GreenElement& x, int d) {
    std::scoped_lock lk(mu_);
    return restricted_lie_power_class_locked(x, d);
}

GreenElement GreenRing::restricted_lie_power_class_locked(const GreenElement& x, int d) {
    if (d < 1) throw DomainError("restricted_lie_power_class: degree must be >= 1");
    auto key = std::make_pair(actual_key(x, "restricted_lie_power_class"), d);
    auto it = restricted_cache_.find(key);
    if (it != restricted_cache_.end()) return it->second;
    MatRep rep = rep_of(x);
    GreenElement out = jordan_type(MatRep{p_, restricted_lie_power_rep(rep, d, budget_)});
    restricted_cache_.emplace(std::move(key), out);
    return out;
}

GreenElement GreenRing::sym_power_class(const GreenElement& x, int r) {
    std::scoped_lock lk(mu_);
    return sym_power_class_locked(x, r);
}

GreenElement GreenRing::sym_power_class_locked(const GreenElement& x, int r) {
    if (r < 0) throw DomainError("sym_power_class: negative degree");
    auto key = std::make_pair(actual_key(x, "sym_power_class"), r);
    auto it = sym_cache_.find(key);
    if (it != sym_cache_.end()) return it->second;
    MatRep rep = rep_of(x);
    GreenElement out = jordan_type(sym_power_rep(rep, r, budget_));
    sym_cache_.emplace(std::move(key), out);
    return out;
}

GreenElement GreenRing::adams(const GreenElement& x, int r) {
    std::scoped_lock lk(mu_);
    return adams_locked(x, r);
}

GreenElement GreenRing::adams_locked(const GreenElement& x, int r) {
    if (x.p != p_) throw DomainError("adams: prime mismatch");
    if (r < 1) throw DomainError("adams: index must be >= 1");
    GreenElement out = green_zero(p_);
    for (int b = 1; b <= p_; ++b) {
        if (x.coord(b).is_zero()) continue;
        out += adams_jordan_locked(b, r) * x.coord(b);
    }
    return out;
}

GreenElement GreenRing::adams_jordan_locked(int b, int r) {
    auto key = std::make_pair(b, r);
    auto it = adams_cache_.find(key);
    if (it != adams_cache_.end()) return it->second;
    TruncSeries<GreenElement> sigma(r, green_zero(p_));
    for (int j = 0; j <= r; ++j)
        sigma.set_coeff(j, sym_power_class_locked(green_jordan(p_, b), j));
    GreenElement out = series_log(sigma).coeff(r) * Rational(r);
    adams_cache_.emplace(key, out);
    return out;
}

GreenElement GreenRing::resolvent(const GreenElement& x, int r) {
    std::scoped_lock lk(mu_);
    return resolvent_locked(x, r);
}

GreenElement GreenRing::resolvent_locked(const GreenElement& x, int r) {
    if (x.p != p_) throw DomainError("resolvent: prime mismatch");
    if (r < 1) throw DomainError("resolvent: index must be >= 1");
    GreenElement out = green_zero(p_);
    for (int b = 1; b <= p_; ++b) {
        if (x.coord(b).is_zero()) continue;
        out += resolvent_jordan_locked(b, r) * x.coord(b);
    }
    return out;
}

GreenElement GreenRing::resolvent_jordan_locked(int b, int r) {
    auto key = std::make_pair(b, r);
    auto it = resolvent_cache_.find(key);
    if (it != resolvent_cache_.end()) return it->second;
    GreenElement out = green_zero(p_);
    for (int d : divisors(r)) {
        int mu = mobius(r / d);
        if (!mu) continue;
        GreenElement power = green_pow(green_jordan(p_, b), r / d);
        out += lie_power_class_locked(power, d) * Rational(mu * d);
    }
    resolvent_cache_.emplace(key, out);
    return out;
}

GreenElement GreenRing::rho(const GreenElement& x, int r) {
    std::scoped_lock lk(mu_);
    if (r < 1) throw DomainError("rho: index must be >= 1");
    GreenElement acc = green_zero(p_);
    for (int d : divisors(r)) acc += resolvent_locked(adams_locked(x, r / d), d);
    return acc * Rational(1, r);
}

ComponentFamily<GreenElement> GreenRing::adams_family() {
    return [this](int r, const GreenElement& x) { return adams(x, r); };
}

ComponentFamily<GreenElement> GreenRing::resolvent_family() {
    return [this](int r, const GreenElement& x) { return resolvent(x, r); };
}

std::vector<GreenElement> GreenRing::b_classes(const GreenElement& v, int k, int m) {
    std::scoped_lock lk(mu_);
    if (k < 1 || k % p_ == 0)
        throw DomainError("b_classes: k must be positive and coprime to p");
    if (m < 0) throw DomainError("b_classes: negative depth");
    std::vector<GreenElement> B;
    for (int i = 0; i <= m; ++i) {
        GreenElement acc = lie_power_class_locked(v, static_cast<int>(ipow(p_, i)) * k);
        for (int j = 1; j <= i; ++j) {
            const GreenElement& prev = B[static_cast<size_t>(i - j)];
            if (!is_actual_module(prev))
                throw NegativeCoords("b_classes: factor class " + prev.str() +
                                     " is virtual; cannot realize it as a module");
            acc -= lie_power_class_locked(prev, static_cast<int>(ipow(p_, j)));
        }
        B.push_back(std::move(acc));
    }
    return B;
}

} // namespace liewb
