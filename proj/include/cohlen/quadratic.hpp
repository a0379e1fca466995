#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic and ordering in a real quadratic field Q[sqrt(D)].
 *
 * A value is p + q*sqrt(D) with rational p, q and a fixed positive
 * non-square radicand D, so the representation is unique and equality is
 * componentwise. Ordering is decided by exact sign analysis (compare p^2
 * against q^2*D when the two parts pull in opposite directions) — no
 * floating point is involved anywhere, including the decimal renderer,
 * which produces the exact truncation of the value.
 */

#include <cohlen/bigint.hpp>
#include <cohlen/rational.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cohlen {

class QuadraticNumber {
public:
    QuadraticNumber(Rational rational_part, Rational radical_part, long long radicand)
        : p_(std::move(rational_part)), q_(std::move(radical_part)), d_(radicand) {
        if (d_ <= 0) throw std::invalid_argument("QuadraticNumber: radicand must be positive");
        BigInt r = isqrt(BigInt(d_));
        if (r * r == BigInt(d_))
            throw std::invalid_argument("QuadraticNumber: radicand must not be a perfect square");
    }

    static QuadraticNumber from_rational(Rational value, long long radicand) {
        return QuadraticNumber(std::move(value), Rational(0), radicand);
    }

    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }
    long long radicand() const { return d_; }

    bool is_rational() const { return q_.is_zero(); }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    QuadraticNumber operator-() const { return QuadraticNumber(-p_, -q_, d_); }

    friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        return QuadraticNumber(a.p_ + b.p_, a.q_ + b.q_, a.d_);
    }
    friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        return QuadraticNumber(a.p_ - b.p_, a.q_ - b.q_, a.d_);
    }
    friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        Rational d(a.d_);
        return QuadraticNumber(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, a.d_);
    }

    QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
    QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }

    friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

    /// Exact sign of p + q*sqrt(D).
    int sign() const {
        if (q_.is_zero()) return p_.sign();
        if (p_.is_zero()) return q_.sign();
        int sp = p_.sign(), sq = q_.sign();
        if (sp == sq) return sp;
        // opposite parts: |p| vs |q|*sqrt(D), squared (equality impossible, D non-square)
        Rational p2 = p_ * p_;
        Rational q2d = q_ * q_ * Rational(d_);
        if (p2 == q2d) throw std::logic_error("QuadraticNumber: radicand is a perfect square");
        return p2 > q2d ? sp : sq;
    }

    QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }

    std::strong_ordering compare(const QuadraticNumber& other) const {
        return (*this - other).sign() <=> 0;
    }

    /// Exact truncation of |value| * 10^digits, rendered with a decimal
    /// point. Correct in every digit (the floor is computed exactly).
    std::string to_decimal_string(std::size_t digits) const {
        bool negative = sign() < 0;
        const QuadraticNumber& v = *this;
        BigInt scaled = negative ? floor_scaled_magnitude(-v, digits)
                                 : floor_scaled_magnitude(v, digits);
        BigInt scale = pow(BigInt(10), digits);
        auto [ip, frac] = divmod(scaled, scale);
        std::string s = negative ? "-" : "";
        s += ip.to_string();
        if (digits > 0) {
            std::string f = frac.to_string();
            s += '.';
            s += std::string(digits - f.size(), '0');
            s += f;
        }
        return s;
    }

private:
    Rational p_;
    Rational q_;
    long long d_;

    void require_same_field(const QuadraticNumber& other) const {
        if (d_ != other.d_)
            throw std::invalid_argument("QuadraticNumber: mismatched radicands");
    }

    // floor(v * 10^digits) for v >= 0
    static BigInt floor_scaled_magnitude(const QuadraticNumber& v, std::size_t digits) {
        BigInt scale = pow(BigInt(10), digits);
        // v*10^k = (A + B*sqrt(D)) / C with integers A, B and C > 0
        BigInt c = v.p_.denominator() * v.q_.denominator();
        BigInt a = v.p_.numerator() * scale * v.q_.denominator();
        BigInt b = v.q_.numerator() * scale * v.p_.denominator();
        if (b.is_zero()) return floor_div(a, c);
        // t = floor(B*sqrt(D)); for negative B the floor drops one more
        // because B*sqrt(D) is irrational
        BigInt t = isqrt(b * b * BigInt(v.d_));
        if (b.sign() < 0) t = -t - BigInt(1);
        BigInt candidate = floor_div(a + t, c);
        // true floor is candidate or candidate+1: accept M+1 iff C*(M+1) <= A + B*sqrt(D),
        // i.e. iff lhs <= B*sqrt(D) with lhs integral (equality impossible, D non-square)
        BigInt next = candidate + BigInt(1);
        BigInt lhs = c * next - a;
        BigInt b2d = b * b * BigInt(v.d_);
        bool next_fits = b.sign() > 0 ? (lhs.sign() <= 0 || lhs * lhs < b2d)
                                      : (lhs.sign() <= 0 && lhs * lhs > b2d);
        return next_fits ? next : candidate;
    }
};

/// Total order on a shared radicand; throws on mismatched radicands.
inline std::strong_ordering quad_compare(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.compare(y);
}

}  // namespace cohlen
