#include "liewb/fpmat.hpp"

#include <algorithm>

namespace liewb {

namespace {

bool small_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// C = A * B with per-row 32-bit accumulators; entries are < P, so the
// accumulator cannot overflow below ~2^26 inner length. The modulus is a
// template constant so the reduction strength-reduces.
template <int P>
void mul_impl(const FpMat& a, const FpMat& b, FpMat& c) {
    int n = a.rows(), m = a.cols(), k = b.cols();
    std::vector<uint32_t> acc(static_cast<size_t>(k));
    for (int i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0u);
        const uint8_t* arow = a.row(i);
        for (int t = 0; t < m; ++t) {
            uint32_t av = arow[t];
            if (!av) continue;
            const uint8_t* brow = b.row(t);
            for (int j = 0; j < k; ++j) acc[static_cast<size_t>(j)] += av * brow[j];
        }
        uint8_t* crow = c.row(i);
        for (int j = 0; j < k; ++j) crow[j] = static_cast<uint8_t>(acc[static_cast<size_t>(j)] % P);
    }
}

void mul_generic(const FpMat& a, const FpMat& b, FpMat& c, int p) {
    int n = a.rows(), m = a.cols(), k = b.cols();
    std::vector<uint32_t> acc(static_cast<size_t>(k));
    for (int i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0u);
        const uint8_t* arow = a.row(i);
        for (int t = 0; t < m; ++t) {
            uint32_t av = arow[t];
            if (!av) continue;
            const uint8_t* brow = b.row(t);
            for (int j = 0; j < k; ++j) {
                acc[static_cast<size_t>(j)] += av * brow[j];
                if (acc[static_cast<size_t>(j)] >= (1u << 30))
                    acc[static_cast<size_t>(j)] %= static_cast<uint32_t>(p);
            }
        }
        uint8_t* crow = c.row(i);
        for (int j = 0; j < k; ++j)
            crow[j] = static_cast<uint8_t>(acc[static_cast<size_t>(j)] % static_cast<uint32_t>(p));
    }
}

// Row echelon rank; works on a scratch copy held by the caller.
template <int P>
int rank_impl(std::vector<uint8_t>& w, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w[static_cast<size_t>(i) * cols + c]) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            std::swap_ranges(w.begin() + static_cast<size_t>(piv) * cols + c,
                             w.begin() + static_cast<size_t>(piv) * cols + cols,
                             w.begin() + static_cast<size_t>(r) * cols + c);
        uint32_t inv = static_cast<uint32_t>(inverse_mod(w[static_cast<size_t>(r) * cols + c], P));
        uint8_t* rr = w.data() + static_cast<size_t>(r) * cols;
        if (inv != 1)
            for (int j = c; j < cols; ++j) rr[j] = static_cast<uint8_t>(rr[j] * inv % P);
        for (int i = r + 1; i < rows; ++i) {
            uint8_t* ri = w.data() + static_cast<size_t>(i) * cols;
            uint32_t f = ri[c];
            if (!f) continue;
            uint32_t nf = P - f;
            for (int j = c; j < cols; ++j)
                ri[j] = static_cast<uint8_t>((ri[j] + nf * rr[j]) % P);
        }
        ++r;
    }
    return r;
}

} // namespace

int inverse_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DomainError("inverse_mod: zero has no inverse");
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw DomainError("inverse_mod: modulus is not prime");
}

FpMat::FpMat(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (!small_prime(p) || p > 127) throw DomainError("FpMat: p must be a prime at most 127");
    if (rows < 0 || cols < 0) throw DomainError("FpMat: negative dimensions");
    a_.assign(static_cast<size_t>(rows) * cols, 0);
}

FpMat FpMat::identity(int p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.a_[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

void FpMat::set(int i, int j, long long v) {
    long long r = v % p_;
    if (r < 0) r += p_;
    a_[idx(i, j)] = static_cast<uint8_t>(r);
}

bool FpMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint8_t x) { return x == 0; });
}

bool FpMat::is_identity() const {
    return rows_ == cols_ && *this == identity(p_, rows_);
}

int FpMat::rank() const {
    std::vector<uint8_t> w = a_;
    switch (p_) {
        case 2: return rank_impl<2>(w, rows_, cols_);
        case 3: return rank_impl<3>(w, rows_, cols_);
        case 5: return rank_impl<5>(w, rows_, cols_);
        case 7: return rank_impl<7>(w, rows_, cols_);
        default: break;
    }
    // Generic modulus: same elimination with runtime reductions.
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (w[static_cast<size_t>(i) * cols_ + c]) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            std::swap_ranges(w.begin() + static_cast<size_t>(piv) * cols_ + c,
                             w.begin() + static_cast<size_t>(piv) * cols_ + cols_,
                             w.begin() + static_cast<size_t>(r) * cols_ + c);
        uint32_t inv = static_cast<uint32_t>(
            inverse_mod(w[static_cast<size_t>(r) * cols_ + c], p_));
        uint8_t* rr = w.data() + static_cast<size_t>(r) * cols_;
        for (int j = c; j < cols_; ++j)
            rr[j] = static_cast<uint8_t>(rr[j] * inv % static_cast<uint32_t>(p_));
        for (int i = r + 1; i < rows_; ++i) {
            uint8_t* ri = w.data() + static_cast<size_t>(i) * cols_;
            uint32_t f = ri[c];
            if (!f) continue;
            uint32_t nf = static_cast<uint32_t>(p_) - f;
            for (int j = c; j < cols_; ++j)
                ri[j] = static_cast<uint8_t>((ri[j] + nf * rr[j]) % static_cast<uint32_t>(p_));
        }
        ++r;
    }
    return r;
}

FpMat FpMat::pow(int e) const {
    if (rows_ != cols_) throw DomainError("FpMat::pow: matrix must be square");
    if (e < 0) throw DomainError("FpMat::pow: negative exponent");
    FpMat acc = identity(p_, rows_);
    FpMat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

FpMat operator+(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("FpMat: shape or modulus mismatch in +");
    FpMat c(a.p_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i)
        c.a_[i] = static_cast<uint8_t>((a.a_[i] + b.a_[i]) % a.p_);
    return c;
}

FpMat operator-(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("FpMat: shape or modulus mismatch in -");
    FpMat c(a.p_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i)
        c.a_[i] = static_cast<uint8_t>((a.a_[i] + a.p_ - b.a_[i]) % a.p_);
    return c;
}

FpMat operator*(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_) throw DomainError("FpMat: modulus mismatch in *");
    if (a.cols_ != b.rows_) throw DomainError("FpMat: shape mismatch in *");
    FpMat c(a.p_, a.rows_, b.cols_);
    switch (a.p_) {
        case 2: mul_impl<2>(a, b, c); break;
        case 3: mul_impl<3>(a, b, c); break;
        case 5: mul_impl<5>(a, b, c); break;
        case 7: mul_impl<7>(a, b, c); break;
        default: mul_generic(a, b, c, a.p_); break;
    }
    return c;
}

FpMat FpMat::kronecker(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_) throw DomainError("FpMat::kronecker: modulus mismatch");
    FpMat c(a.p_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i1 = 0; i1 < a.rows_; ++i1)
        for (int j1 = 0; j1 < a.cols_; ++j1) {
            uint32_t av = a.at(i1, j1);
            if (!av) continue;
            for (int i2 = 0; i2 < b.rows_; ++i2) {
                uint8_t* crow = c.row(i1 * b.rows_ + i2);
                const uint8_t* brow = b.row(i2);
                for (int j2 = 0; j2 < b.cols_; ++j2)
                    crow[j1 * b.cols_ + j2] =
                        static_cast<uint8_t>(av * brow[j2] % static_cast<uint32_t>(a.p_));
            }
        }
    return c;
}

FpMat FpMat::block_diag(const FpMat& a, const FpMat& b) {
    if (a.p_ != b.p_) throw DomainError("FpMat::block_diag: modulus mismatch");
    FpMat c(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        std::copy(a.row(i), a.row(i) + a.cols_, c.row(i));
    for (int i = 0; i < b.rows_; ++i)
        std::copy(b.row(i), b.row(i) + b.cols_, c.row(a.rows_ + i) + a.cols_);
    return c;
}

} // namespace liewb
