#pragma once

#include <cstdint>
#include <vector>

#include "liewb/errors.hpp"

namespace liewb {

// Dense matrix over the prime field F_p for small p, entries stored reduced in
// [0, p), row-major. Sized for exact linear algebra on a few thousand rows;
// multiplication and rank have specialized inner loops for p in {2, 3, 5, 7}.
class FpMat {
public:
    FpMat(int p, int rows, int cols);
    static FpMat identity(int p, int n);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, long long v);

    const uint8_t* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }
    uint8_t* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }

    bool is_zero() const;
    bool is_identity() const;
    int rank() const;
    FpMat pow(int e) const;

    friend FpMat operator+(const FpMat& a, const FpMat& b);
    friend FpMat operator-(const FpMat& a, const FpMat& b);
    friend FpMat operator*(const FpMat& a, const FpMat& b);
    friend bool operator==(const FpMat& a, const FpMat& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const FpMat& a, const FpMat& b) { return !(a == b); }

    static FpMat kronecker(const FpMat& a, const FpMat& b);
    static FpMat block_diag(const FpMat& a, const FpMat& b);

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw DomainError("FpMat: index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }
    int p_, rows_, cols_;
    std::vector<uint8_t> a_;
};

// Multiplicative inverse mod p (p prime, 0 < a < p).
int inverse_mod(int a, int p);

} // namespace liewb
