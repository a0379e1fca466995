#pragma once

/**
 * @file asymptotics.hpp
 * @brief Exact-rational limit extraction from integer sequences.
 *
 * Everything here stays in exact arithmetic: ratios f(n)/n^d are exact
 * rationals, extrapolants are exact rationals, and "convergence" is
 * reported as an exact difference of extrapolants rather than a floating
 * tolerance.
 *
 * richardson_limit builds the dyadic Richardson table on nodes
 * b, 2b, 4b, ..., eliminating the 1/n, 1/n^2, ... error terms stage by
 * stage. The first stage is the classical 2*r(2n) - r(n); deeper stages
 * make the result exact for any f that is a degree-d polynomial with the
 * expected leading term, which is what the m-primary cross-checks need.
 */

#include <cohlen/bigint.hpp>
#include <cohlen/counting.hpp>
#include <cohlen/lengths.hpp>
#include <cohlen/monomial.hpp>
#include <cohlen/rational.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cohlen {

struct AsymptoticEstimate {
    long long degree = 0;
    std::vector<std::pair<long long, Rational>> raw;  // (n, f(n)/n^d)
    Rational extrapolated;
    Rational error_indicator;  // |final - deepest previous-stage value|
};

/// Richardson extrapolation of f(n)/n^d for f given on n = 1..N, N >= 4.
inline AsymptoticEstimate richardson_limit(std::span<const BigInt> f, long long degree) {
    const long long n_count = static_cast<long long>(f.size());
    if (n_count < 4) throw std::invalid_argument("richardson_limit: need at least four terms");
    if (degree < 1) throw std::invalid_argument("richardson_limit: degree must be positive");

    AsymptoticEstimate est;
    est.degree = degree;
    auto ratio = [&](long long n) {
        return Rational(f[static_cast<std::size_t>(n - 1)],
                        pow(BigInt(n), static_cast<unsigned long long>(degree)));
    };
    for (long long n = 1; n <= n_count; ++n) est.raw.emplace_back(n, ratio(n));

    long long levels = 0;
    while ((1ll << (levels + 1)) <= n_count) ++levels;  // deepest s with 2^s <= N
    const long long stages = std::min(degree, levels);
    const long long base = n_count >> stages;

    std::vector<Rational> column;
    for (long long j = 0; j <= stages; ++j) column.push_back(ratio(base << j));
    Rational previous_stage_tail = column.back();
    for (long long stage = 1; stage <= stages; ++stage) {
        previous_stage_tail = column.back();
        Rational weight(BigInt(1ll << stage));
        std::vector<Rational> next;
        for (std::size_t j = 0; j + 1 < column.size(); ++j)
            next.push_back((weight * column[j + 1] - column[j]) / (weight - Rational(1)));
        column = std::move(next);
    }
    est.extrapolated = column.front();
    est.error_indicator = (est.extrapolated - previous_stage_tail).abs();
    return est;
}

/// Leading coefficient of an eventually polynomial sequence: the d-th
/// finite difference, constant over the last max(3, N/4) points, divided
/// by d!. Returns nullopt when the window is not constant (or too short).
inline std::optional<Rational> finite_difference_leading(std::span<const BigInt> f,
                                                         long long degree) {
    const long long n_count = static_cast<long long>(f.size());
    if (degree < 0) throw std::invalid_argument("finite_difference_leading: negative degree");
    std::vector<BigInt> diff(f.begin(), f.end());
    for (long long step = 0; step < degree; ++step) {
        if (diff.size() < 2) return std::nullopt;
        std::vector<BigInt> next;
        next.reserve(diff.size() - 1);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        diff = std::move(next);
    }
    const long long window = std::max<long long>(3, n_count / 4);
    if (static_cast<long long>(diff.size()) < window) return std::nullopt;
    const BigInt& tail = diff.back();
    for (long long i = 0; i < window; ++i)
        if (diff[diff.size() - 1 - static_cast<std::size_t>(i)] != tail) return std::nullopt;
    BigInt factorial(1);
    for (long long i = 2; i <= degree; ++i) factorial *= BigInt(i);
    return Rational(tail, factorial);
}

/// lambda(R/I^n) for an m-primary ideal (finite by definition).
inline BigInt hilbert_samuel_length(const MonomialIdeal& ideal, long long n,
                                    CountStrategy strategy = CountStrategy::pivot) {
    MonomialIdeal pw = power(ideal, n);
    int top = top_disagreement_degree(pw, MonomialIdeal::unit(ideal.dim()), strategy);
    BigInt total;
    GradedCounter counter;
    for (int m = 0; m <= top; ++m)
        total += strategy == CountStrategy::pivot
                     ? counter.standard_count(pw, m)
                     : count_standard(pw, m, strategy);
    return total;
}

/// Multiplicity e(I) of an m-primary monomial ideal: d! times the leading
/// coefficient of lambda(R/I^n). m-primariness is verified by saturation
/// (sat(I) must be the unit ideal); failure to stabilize by n_max is an
/// error rather than a guess.
inline Rational multiplicity_mprimary(const MonomialIdeal& ideal, long long n_max,
                                      CountStrategy strategy = CountStrategy::pivot) {
    if (n_max < 1) throw std::invalid_argument("multiplicity_mprimary: n_max must be >= 1");
    if (ideal.is_zero() || !saturate_irrelevant(ideal).is_unit())
        throw std::invalid_argument("multiplicity_mprimary: ideal is not m-primary");
    std::vector<BigInt> lengths;
    lengths.reserve(static_cast<std::size_t>(n_max));
    for (long long n = 1; n <= n_max; ++n)
        lengths.push_back(hilbert_samuel_length(ideal, n, strategy));
    auto leading = finite_difference_leading(lengths, ideal.dim());
    if (!leading)
        throw std::runtime_error("multiplicity_mprimary: length function not stabilized by n_max");
    BigInt factorial(1);
    for (long long i = 2; i <= ideal.dim(); ++i) factorial *= BigInt(i);
    return Rational(factorial) * *leading;
}

/// Finite-generation regime of the diagonal: the Hilbert function is
/// eventually polynomial once a >= b * maxdeg. The count itself is
/// defined for any a, b; callers may warn outside the regime.
inline bool diagonal_in_finite_generation_regime(const MonomialIdeal& ideal, long long a,
                                                 long long b) {
    return a >= b * ideal.max_generator_degree();
}

/// dim (I^{b n})_{a n}, the diagonal Hilbert function; n = 0 gives the
/// base field.
inline BigInt diagonal_hilbert(const MonomialIdeal& ideal, long long a, long long b, long long n,
                               CountStrategy strategy = CountStrategy::pivot) {
    if (a < 1 || b < 1) throw std::invalid_argument("diagonal_hilbert: diagonal must be positive");
    if (n < 0) throw std::invalid_argument("diagonal_hilbert: n must be nonnegative");
    if (n == 0) return BigInt(1);
    return count_graded_piece(power(ideal, b * n), static_cast<int>(a * n), strategy);
}

}  // namespace cohlen
