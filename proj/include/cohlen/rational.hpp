#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over BigInt.
 *
 * Canonical form: denominator > 0, gcd(numerator, denominator) = 1,
 * zero stored as 0/1. No rounding anywhere; decimal output is a separate
 * display-only rendering.
 */

#include <cohlen/bigint.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cohlen {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    Rational(long long num, long long den) : num_(num), den_(den) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    /// "num/den", or just "num" for integers. Always exact.
    std::string to_string() const {
        std::string s = num_.to_string();
        if (!is_integer()) {
            s += '/';
            s += den_.to_string();
        }
        return s;
    }

    /// Decimal rendering truncated toward zero to `digits` fractional places.
    /// Display-only; never fed back into computation.
    std::string to_decimal_string(std::size_t digits) const {
        BigInt n = num_.abs();
        auto [ip, rem] = divmod(n, den_);
        std::string s = sign() < 0 ? "-" : "";
        s += ip.to_string();
        if (digits > 0) {
            BigInt scaled = rem * pow(BigInt(10), digits) / den_;
            std::string frac = scaled.to_string();
            s += '.';
            s += std::string(digits - frac.size(), '0');
            s += frac;
        }
        return s;
    }

private:
    BigInt num_;
    BigInt den_;  // > 0

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ /= g;
            den_ /= g;
        }
    }
};

}  // namespace cohlen
