#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integers.
 *
 * Sign-magnitude representation over 32-bit limbs (little-endian).
 * Division is truncated (C semantics); floor_div is provided separately.
 * Everything downstream (rationals, lattice-point counts, section counts)
 * is built on this type, so the pipeline never touches floating point.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cohlen {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
            u >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}

    explicit BigInt(std::string_view decimal) {
        std::size_t i = 0;
        int sign = 1;
        if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
            sign = decimal[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i == decimal.size())
            throw std::invalid_argument("BigInt: empty digit string");
        for (; i < decimal.size(); i += 9) {
            std::size_t chunk_len = std::min<std::size_t>(9, decimal.size() - i);
            std::uint32_t chunk = 0;
            std::uint32_t scale = 1;
            for (std::size_t j = 0; j < chunk_len; ++j) {
                char c = decimal[i + j];
                if (c < '0' || c > '9')
                    throw std::invalid_argument("BigInt: invalid digit in string");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                scale *= 10;
            }
            mul_small(scale);
            add_small(chunk);
        }
        if (!mag_.empty()) sign_ = sign;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const { return sign_ < 0 ? -*this : *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated quotient and remainder: a == q*b + r, |r| < |b|, sign(r) == sign(a).
    friend std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) return {BigInt(), BigInt()};
        if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt(), a};
        auto [qm, rm] = divmod_mag(a.mag_, b.mag_);
        BigInt q, r;
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.mag_.empty()) r.sign_ = a.sign_;
        return {std::move(q), std::move(r)};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
        std::vector<std::uint32_t> work = mag_;
        while (!work.empty()) chunks.push_back(div_small_inplace(work, 1000000000u));
        std::string s;
        if (sign_ < 0) s += '-';
        s += std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            s += std::string(9 - part.size(), '0');
            s += part;
        }
        return s;
    }

    /// Throws std::overflow_error when the value does not fit.
    long long to_long_long() const {
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long u = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
        if (sign_ >= 0) {
            if (u > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in long long");
            return static_cast<long long>(u);
        }
        if (u > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in long long");
        return u == 0x8000000000000000ull ? std::numeric_limits<long long>::min()
                                          : -static_cast<long long>(u);
    }

    std::size_t bit_length() const {
        if (mag_.empty()) return 0;
        std::uint32_t top = mag_.back();
        std::size_t bits = (mag_.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limbs

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = s < 0 ? 1 : 0;
            if (s < 0) s += 1ll << 32;
            r[i] = static_cast<std::uint32_t>(s);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t s = ai * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(s);
                carry = s >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    // divides m by d in place, returns remainder
    static std::uint32_t div_small_inplace(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    // Knuth algorithm D on normalized magnitudes; returns (quotient, remainder)
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (b.size() == 1) {
            std::vector<std::uint32_t> q = a;
            std::uint32_t r = div_small_inplace(q, b[0]);
            std::vector<std::uint32_t> rem;
            if (r) rem.push_back(r);
            return {std::move(q), std::move(rem)};
        }
        // normalize so the top divisor limb has its high bit set
        int shift = 0;
        for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<std::uint32_t> u = shl_mag(a, shift);
        std::vector<std::uint32_t> v = shl_mag(b, shift);
        u.resize(a.size() + 1, 0);  // extra high limb for the loop

        const std::size_t n = v.size();
        const std::size_t m = u.size() - n;
        std::vector<std::uint32_t> q(m, 0);
        const std::uint64_t base = 1ull << 32;
        for (std::size_t j = m; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract qhat * v from u[j .. j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
                borrow = t < 0 ? 1 : 0;
                if (t < 0) t += 1ll << 32;
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add v back
                t += 1ll << 32;
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= 0xffffffffll;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        trim(q);
        u.resize(n);
        std::vector<std::uint32_t> rem = shr_mag(u, shift);
        return {std::move(q), std::move(rem)};
    }

    static std::vector<std::uint32_t> shl_mag(std::vector<std::uint32_t> m, int bits) {
        if (bits == 0 || m.empty()) return m;
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> (32 - bits);
            limb = (limb << bits) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
        return m;
    }

    static std::vector<std::uint32_t> shr_mag(std::vector<std::uint32_t> m, int bits) {
        if (bits == 0 || m.empty()) {
            trim(m);
            return m;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t high = i + 1 < m.size() ? m[i + 1] : 0;
            m[i] = (m[i] >> bits) | (high << (32 - bits));
        }
        trim(m);
        return m;
    }

    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t s = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (auto& limb : mag_) {
            if (carry == 0) break;
            std::uint64_t s = limb + carry;
            limb = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Quotient rounded toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero() && (r.sign() < 0) != (b.sign() < 0)) q -= BigInt(1);
    return q;
}

inline BigInt pow(const BigInt& base, unsigned long long exp) {
    BigInt result(1);
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// Exact floor of the square root. Newton iteration with a final
/// r^2 <= n < (r+1)^2 adjustment, so the result never depends on the
/// starting guess.
inline BigInt isqrt(const BigInt& n) {
    if (n.sign() < 0) throw std::domain_error("isqrt: negative argument");
    if (n.is_zero()) return BigInt();
    BigInt x = pow(BigInt(2), (n.bit_length() + 1) / 2);  // x >= sqrt(n)
    while (true) {
        BigInt y = (x + n / x) / BigInt(2);
        if (y >= x) break;
        x = std::move(y);
    }
    while (x * x > n) x -= BigInt(1);
    while ((x + BigInt(1)) * (x + BigInt(1)) <= n) x += BigInt(1);
    return x;
}

/// Binomial coefficient with the section-count convention: 0 whenever
/// n < k (covers all negative n once k >= 0).
inline BigInt binomial(long long n, long long k) {
    if (k < 0) throw std::domain_error("binomial: negative k");
    if (n < k) return BigInt();
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (long long i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result /= BigInt(i);
    }
    return result;
}

}  // namespace cohlen
