#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "liewb/errors.hpp"

namespace liewb {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number with arbitrary-precision numerator and denominator.
// Always kept in lowest terms with denominator >= 1. There is deliberately no
// conversion to or from floating point: every quantity in this library is
// exact, and an operation that needed a float would be a bug.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}           // NOLINT
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) : v_(num) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ /= boost::multiprecision::cpp_rational(den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && v_ >= 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    // Exact conversion; throws unless the value is an integer fitting long long.
    long long to_int() const {
        if (!is_integer()) throw DomainError("Rational::to_int on non-integer " + str());
        return static_cast<long long>(num());
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "num" for integers, "num/den" otherwise.
    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

    // Parses "num" or "num/den" (den > 0 after normalization handled internally).
    static Rational parse(const std::string& s) {
        auto parse_int = [&s](const std::string& part) -> BigInt {
            size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
            if (part.size() == start)
                throw DomainError("Rational::parse: malformed rational '" + s + "'");
            for (size_t i = start; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9')
                    throw DomainError("Rational::parse: malformed rational '" + s + "'");
            return BigInt(part);
        };
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_int(s));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    static Rational pow(const Rational& base, int e) {
        if (e < 0) {
            if (base.is_zero()) throw DomainError("Rational::pow: 0 to negative power");
            return pow(1 / base, -e);
        }
        Rational r(1), b = base;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

} // namespace liewb
