#pragma once

/**
 * @file k3.hpp
 * @brief Section counts on the blow-up of P^3 along a curve on a K3
 *        surface with Picard lattice Z^3 and intersection form
 *        q(x,y,z) = 4x^2 - 4y^2 - 4z^2.
 *
 * The configuration is a curve class (a,b,c) with a > 0,
 * a^2 - b^2 - c^2 > 0 and D = b^2 + c^2 not a square, together with a
 * summation cutoff e. The irrational slope lambda2 = a + sqrt(D) governs
 * everything: h^0 of mH - nC on the surface vanishes below it and is
 * given by half the self-intersection plus two above it, and h^0 of
 * m*Htilde - n*E on the blow-up satisfies a descent recursion in
 * (m - 4, n - 1) picking up the surface term exactly above the slope.
 *
 * sigma(n) = sum_{m=0}^{en} h0_blowup(m, n) is computed twice:
 * once straight from the memoized recursion, and once from the regrouped
 * closed sum over the lattice region below the slope. The two routes are
 * independent and must agree exactly; the closed-form limit of
 * sigma(n)/n^4 lives in Q[sqrt(D)].
 *
 * All slope comparisons and floors are decided in pure integer
 * arithmetic (squared comparisons and integer square roots); decimal
 * output never feeds back into the computation.
 */

#include <cohlen/bigint.hpp>
#include <cohlen/quadratic.hpp>
#include <cohlen/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cohlen {

/// A class in Pic(S) = Z^3.
struct DivisorClass {
    long long x = 0;
    long long y = 0;
    long long z = 0;
};

/// The intersection form q(x,y,z) = 4x^2 - 4y^2 - 4z^2, polarized.
inline BigInt pairing(const DivisorClass& u, const DivisorClass& v) {
    return BigInt(4) * (BigInt(u.x) * BigInt(v.x) - BigInt(u.y) * BigInt(v.y) -
                        BigInt(u.z) * BigInt(v.z));
}

inline BigInt self_intersection(const DivisorClass& u) { return pairing(u, u); }

/// A class m*Htilde - n*E on the blow-up of P^3 along the curve.
struct BlowupClass {
    long long m = 0;
    long long n = 0;  // >= 0

    BlowupClass(long long m_, long long n_) : m(m_), n(n_) {
        if (n < 0) throw std::invalid_argument("BlowupClass: exceptional multiplicity n >= 0");
    }
};

/// Validated (a, b, c, e) configuration. Defaults (4, 3, 2, 8).
class K3Params {
public:
    K3Params(long long a, long long b, long long c, long long e)
        : a_(a), b_(b), c_(c), e_(e), d_(b * b + c * c) {
        if (a_ <= 0) throw std::invalid_argument("K3Params: a must be positive");
        if (a_ * a_ - d_ <= 0)
            throw std::invalid_argument("K3Params: a^2 - b^2 - c^2 must be positive");
        BigInt root = isqrt(BigInt(d_));
        if (root * root == BigInt(d_))
            throw std::invalid_argument("K3Params: b^2 + c^2 must not be a perfect square");
        // lambda2 = a + sqrt(D) > 7, decided in integers
        if (!(a_ > 7 || d_ > (7 - a_) * (7 - a_)))
            throw std::invalid_argument("K3Params: requires lambda2 = a + sqrt(b^2+c^2) > 7");
        // e > lambda2, so the high range of the regrouped sum is nonempty
        if (!(e_ > a_ && (e_ - a_) * (e_ - a_) > d_))
            throw std::invalid_argument("K3Params: cutoff e must exceed lambda2");
    }

    static K3Params defaults() { return K3Params(4, 3, 2, 8); }

    long long a() const { return a_; }
    long long b() const { return b_; }
    long long c() const { return c_; }
    long long cutoff_e() const { return e_; }
    long long radicand() const { return d_; }

    DivisorClass hyperplane_class() const { return {1, 0, 0}; }
    DivisorClass curve_class() const { return {a_, b_, c_}; }

    QuadraticNumber lambda1() const {
        return QuadraticNumber(Rational(a_), Rational(-1), d_);
    }
    QuadraticNumber lambda2() const {
        return QuadraticNumber(Rational(a_), Rational(1), d_);
    }
    /// lambda = lambda2 - 4, the slope of the floor sums.
    QuadraticNumber lambda() const {
        return QuadraticNumber(Rational(a_ - 4), Rational(1), d_);
    }

private:
    long long a_, b_, c_, e_, d_;
};

/// Section counts over one (a,b,c,e) configuration, with a shared memo
/// for the blow-up recursion. Single-threaded use per instance; separate
/// instances are fully independent.
class BlowupCohomology {
public:
    explicit BlowupCohomology(K3Params params) : params_(params) {}

    const K3Params& params() const { return params_; }

    /// m > lambda2 * n, decided exactly. Equality cannot occur for n >= 1
    /// because sqrt(D) is irrational.
    bool exceeds_slope(long long m, long long n) const {
        if (n == 0) return m > 0;
        long long excess = m - params_.a() * n;
        if (excess <= 0) return false;
        return i128(excess) * excess > i128(params_.radicand()) * n * n;
    }

    /// floor(lambda * l) = (a-4)l + floor(l*sqrt(D)).
    long long floor_lambda_multiple(long long l) const {
        if (l < 0) throw std::invalid_argument("floor_lambda_multiple: negative multiplier");
        if (l == 0) return 0;
        BigInt root = isqrt(BigInt(params_.radicand()) * BigInt(l) * BigInt(l));
        return (params_.a() - 4) * l + root.to_long_long();
    }

    /// floor(r / lambda): the largest t with lambda * t < r (strict and
    /// non-strict floors coincide, the slope being irrational).
    long long floor_div_lambda(long long r) const {
        if (r < 0) throw std::invalid_argument("floor_div_lambda: negative argument");
        if (r == 0) return 0;
        long long lo = 0, hi = r;  // lambda > 3, so floor(r/lambda) < r
        while (lo < hi) {
            long long mid = lo + (hi - lo + 1) / 2;
            if (lambda_multiple_below(mid, r))
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    /// h^0(S, mH - nC) for n >= 1: zero below the slope, half the
    /// self-intersection plus two above it.
    BigInt surface_sections(long long m, long long n) const {
        if (n < 1) throw std::invalid_argument("surface_sections: n must be >= 1");
        if (!exceeds_slope(m, n)) return BigInt();
        DivisorClass cls{m - params_.a() * n, -params_.b() * n, -params_.c() * n};
        return self_intersection(cls) / BigInt(2) + BigInt(2);
    }

    BigInt blowup_sections(const BlowupClass& cls) { return blowup_sections(cls.m, cls.n); }

    /// h^0(X, m*Htilde - nE). Descends through (m-4, n-1) picking up the
    /// surface term above the slope; n = 0 is h^0(O_P3(m)) = C(m+3, 3).
    BigInt blowup_sections(long long m, long long n) {
        if (n < 0) throw std::invalid_argument("blowup_sections: n must be >= 0");
        if (n == 0) return binomial(m + 3, 3);
        if (m < 4 * n) return BigInt();  // descends to negative degree on P^3
        auto key = memo_key(m, n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt result = blowup_sections(m - 4, n - 1);
        if (exceeds_slope(m, n)) result += surface_sections(m, n);
        memo_.emplace(key, result);
        return result;
    }

    /// sigma(n) = sum_{m=0}^{en} h^0(m*Htilde - nE), straight from the
    /// recursion. n = 0 is admitted and sums the P^3 sections.
    BigInt sigma_by_recursion(long long n) {
        if (n < 0) throw std::invalid_argument("sigma_by_recursion: n must be >= 0");
        BigInt total;
        for (long long m = 0; m <= params_.cutoff_e() * n; ++m) total += blowup_sections(m, n);
        return total;
    }

    /// Half self-intersection of (r+4s)H - sC, from the expanded form
    /// 2((r + (4-a)s)^2 - D s^2). The cumulative version below sums the
    /// pairing route instead, so the two stay independent.
    BigInt half_self_intersection(long long s, long long r) const {
        BigInt shift = BigInt(r + (4 - params_.a()) * s);
        return BigInt(2) * (shift * shift - BigInt(params_.radicand()) * BigInt(s) * BigInt(s));
    }

    /// Q(s, r) = (1/2) sum_{k=1..s} ((r+4k)H - kC)^2; zero for s < 1.
    BigInt cumulative_half_self_intersection(long long s, long long r) const {
        BigInt total;
        for (long long k = 1; k <= s; ++k) {
            DivisorClass cls{r + 4 * k - params_.a() * k, -params_.b() * k, -params_.c() * k};
            total += self_intersection(cls) / BigInt(2);
        }
        return total;
    }

    /// U(n) = sum_{r=0}^{(e-4)n} h^0(O_P3(r)).
    BigInt projective_sections_sum(long long n) const {
        BigInt total;
        for (long long r = 0; r <= (params_.cutoff_e() - 4) * n; ++r) total += binomial(r + 3, 3);
        return total;
    }

    /// V(n): twice the accumulated Euler constants — floor(r/lambda) for
    /// each r below the slope and n for each of the (e-4)n - floor(lambda n)
    /// values of r above it. (Counting the high range directly gives
    /// (e-4)n - floor(lambda n) terms; there is no further offset.)
    BigInt euler_constant_sum(long long n) const {
        long long fl = floor_lambda_multiple(n);
        BigInt floors;
        for (long long r = 0; r <= fl; ++r) floors += BigInt(floor_div_lambda(r));
        BigInt high_count = BigInt((params_.cutoff_e() - 4) * n - fl);
        return BigInt(2) * (floors + BigInt(n) * high_count);
    }

    /// sigma(n) from the regrouped sum:
    ///   sum_{l=1}^{n-1} sum_{r=floor(lambda l)+1}^{floor(lambda n)} P(l, r)
    /// + sum_{r=floor(lambda n)+1}^{(e-4)n} Q(n, r) + U(n) + V(n).
    /// Must equal sigma_by_recursion(n) exactly.
    BigInt sigma_by_decomposition(long long n) {
        if (n < 1) throw std::invalid_argument("sigma_by_decomposition: n must be >= 1");
        const long long fl_n = floor_lambda_multiple(n);
        BigInt total;
        for (long long l = 1; l <= n - 1; ++l)
            for (long long r = floor_lambda_multiple(l) + 1; r <= fl_n; ++r)
                total += half_self_intersection(l, r);
        for (long long r = fl_n + 1; r <= (params_.cutoff_e() - 4) * n; ++r)
            total += cumulative_half_self_intersection(n, r);
        total += projective_sections_sum(n);
        total += euler_constant_sum(n);
        return total;
    }

private:
    K3Params params_;
    std::unordered_map<std::uint64_t, BigInt> memo_;

    using i128 = __int128;

    static std::uint64_t memo_key(long long m, long long n) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(m)) << 32) |
               static_cast<std::uint32_t>(n);
    }

    // lambda * t < r, exactly
    bool lambda_multiple_below(long long t, long long r) const {
        if (t == 0) return r > 0;
        long long rhs = r - (params_.a() - 4) * t;
        if (rhs <= 0) return false;
        return i128(params_.radicand()) * t * t < i128(rhs) * rhs;
    }
};

/// The limit of sigma(n)/n^4 in closed form over Q[sqrt(D)], for a = 4:
///   A + B - (1/6)lambda^3 + (1/2)D*lambda  with  lambda = sqrt(D),
///   A = (2/3)(e-4)^3 - (2/3)D(e-4),  B = (e-4)^4/24.
/// For the defaults this is 56/3 + (13/3)sqrt(13); the nonzero radical
/// part is what makes the limit irrational.
///
/// For a != 4 the lambda^2 coefficient admits two inequivalent candidate
/// forms, (1/2)(4-a) and (1/2)(4-a)^2, so the call is rejected and the
/// error reports both variants without endorsing either.
inline QuadraticNumber closed_form_limit(const K3Params& params) {
    const long long a = params.a();
    const long long d = params.radicand();
    const Rational e4(params.cutoff_e() - 4);
    const Rational fourth_power = e4 * e4 * e4 * e4;

    Rational coeff_a = Rational(2, 3) * e4 * e4 * e4 + Rational(4 - a) * e4 * e4 +
                       Rational(2, 3) * Rational((4 - a) * (4 - a) - d) * e4;
    Rational coeff_b = fourth_power / Rational(24);

    QuadraticNumber lambda = params.lambda();
    QuadraticNumber lambda_sq = lambda * lambda;
    QuadraticNumber lambda_cu = lambda_sq * lambda;
    auto scale = [&](const Rational& c, const QuadraticNumber& v) {
        return QuadraticNumber::from_rational(c, d) * v;
    };
    QuadraticNumber head = QuadraticNumber::from_rational(coeff_a + coeff_b, d);
    QuadraticNumber tail_shared =
        scale(Rational(1, 6), lambda_cu) +
        scale(Rational(1, 2) * Rational((4 - a) * (4 - a) - d), lambda);

    if (a != 4) {
        QuadraticNumber linear = head - (tail_shared + scale(Rational(4 - a, 2), lambda_sq));
        QuadraticNumber squared =
            head - (tail_shared + scale(Rational((4 - a) * (4 - a), 2), lambda_sq));
        throw std::domain_error(
            "closed_form_limit: only a = 4 is supported — the lambda^2 coefficient is "
            "ambiguous for a != 4: with (1/2)(4-a)lambda^2 the limit is " +
            linear.to_decimal_string(12) + ", with (1/2)(4-a)^2 lambda^2 it is " +
            squared.to_decimal_string(12) + "; both collapse to the same value at a = 4");
    }
    return head - tail_shared;  // the lambda^2 term vanishes at a = 4
}

struct ConvergenceRow {
    long long n = 0;
    BigInt sigma;
    Rational ratio;                      // sigma / n^4, exact
    std::optional<Rational> extrapolant;  // 2*ratio(n) - ratio(n/2) for even n
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::optional<QuadraticNumber> closed_form;  // present when a = 4
    std::string closed_form_decimal;             // 30 digits
    std::string final_extrapolant_decimal;       // 30 digits
};

/// sigma(n), the exact ratios sigma(n)/n^4, and the pairwise Richardson
/// extrapolants, for n = 1..n_max (n_max >= 8), against the closed form.
inline ConvergenceTable convergence_table(const K3Params& params, long long n_max) {
    if (n_max < 8) throw std::invalid_argument("convergence_table: n_max must be >= 8");
    BlowupCohomology calc(params);
    ConvergenceTable table;
    std::vector<Rational> ratios(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 1; n <= n_max; ++n) {
        ConvergenceRow row;
        row.n = n;
        row.sigma = calc.sigma_by_recursion(n);
        row.ratio = Rational(row.sigma, pow(BigInt(n), 4));
        ratios[static_cast<std::size_t>(n)] = row.ratio;
        if (n % 2 == 0)
            row.extrapolant =
                Rational(2) * row.ratio - ratios[static_cast<std::size_t>(n / 2)];
        table.rows.push_back(std::move(row));
    }
    for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it)
        if (it->extrapolant) {
            table.final_extrapolant_decimal = it->extrapolant->to_decimal_string(30);
            break;
        }
    if (params.a() == 4) {
        table.closed_form = closed_form_limit(params);
        table.closed_form_decimal = table.closed_form->to_decimal_string(30);
    }
    return table;
}

}  // namespace cohlen
