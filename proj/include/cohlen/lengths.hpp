#pragma once

/**
 * @file lengths.hpp
 * @brief Length invariants for powers of a monomial ideal.
 *
 * For a proper monomial ideal I in d >= 2 variables, the degree-zero
 * local cohomology of R/I^n has length
 *
 *     lambda(n) = sum_m [ dim sat(I^n)_m - dim (I^n)_m ],
 *
 * a finite sum because the two ideals agree above the top disagreement
 * degree. The same quantity splits as sigma(n) - tau(n), where sigma and
 * tau are the degreewise dimension sums of sat(I^n) and I^n up to degree
 * e*n, valid once the slope e clears every disagreement degree. The
 * slope is found empirically (max over n of the observed requirement,
 * floored by the generator degrees); the split identity is then checked
 * per record rather than assumed.
 */

#include <cohlen/bigint.hpp>
#include <cohlen/counting.hpp>
#include <cohlen/monomial.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace cohlen {

struct LengthRecord {
    long long n = 0;
    BigInt lambda;  // length of the saturation quotient of I^n
    BigInt sigma;   // sum of dim sat(I^n)_m, m = 0..e*n
    BigInt tau;     // sum of dim (I^n)_m,   m = 0..e*n
    long long cutoff_e = 0;
};

namespace detail {

inline void require_length_preconditions(const MonomialIdeal& ideal) {
    if (ideal.dim() < 2)
        throw std::invalid_argument(
            "ambient dimension must be at least 2: the length of the degree-zero local "
            "cohomology is only defined here under depth >= 2 at the irrelevant ideal");
    if (ideal.is_unit())
        throw std::invalid_argument("the ideal must be proper");
}

}  // namespace detail

/// lambda(H^0_m(R/I^n)), computed as the length of sat(I^n)/I^n.
inline BigInt h0_length(const MonomialIdeal& ideal, long long n,
                        CountStrategy strategy = CountStrategy::pivot) {
    detail::require_length_preconditions(ideal);
    MonomialIdeal pw = power(ideal, n);
    MonomialIdeal sat = saturate_irrelevant(pw);
    int top = top_disagreement_degree(pw, sat, strategy);
    BigInt total;
    GradedCounter counter;
    for (int m = 0; m <= top; ++m) {
        if (strategy == CountStrategy::pivot)
            total += counter.ideal_count(sat, m) - counter.ideal_count(pw, m);
        else
            total += count_graded_piece(sat, m, strategy) - count_graded_piece(pw, m, strategy);
    }
    return total;
}

/// sigma(n) = sum_{m=0}^{e*n} dim sat(I^n)_m.
inline BigInt sigma(const MonomialIdeal& ideal, long long n, long long e,
                    CountStrategy strategy = CountStrategy::pivot) {
    if (e < 1) throw std::invalid_argument("sigma: cutoff must be >= 1");
    MonomialIdeal sat = saturate_irrelevant(power(ideal, n));
    BigInt total;
    GradedCounter counter;
    for (long long m = 0; m <= e * n; ++m)
        total += strategy == CountStrategy::pivot
                     ? counter.ideal_count(sat, static_cast<int>(m))
                     : count_graded_piece(sat, static_cast<int>(m), strategy);
    return total;
}

/// tau(n) = sum_{m=0}^{e*n} dim (I^n)_m.
inline BigInt tau(const MonomialIdeal& ideal, long long n, long long e,
                  CountStrategy strategy = CountStrategy::pivot) {
    if (e < 1) throw std::invalid_argument("tau: cutoff must be >= 1");
    MonomialIdeal pw = power(ideal, n);
    BigInt total;
    GradedCounter counter;
    for (long long m = 0; m <= e * n; ++m)
        total += strategy == CountStrategy::pivot
                     ? counter.ideal_count(pw, static_cast<int>(m))
                     : count_graded_piece(pw, static_cast<int>(m), strategy);
    return total;
}

/// Smallest slope observed to clear every disagreement degree for
/// n <= n_max, floored by the maximal generator degree (and by 1).
inline long long empirical_swanson_e(const MonomialIdeal& ideal, long long n_max) {
    if (n_max < 1) throw std::invalid_argument("empirical_swanson_e: n_max must be >= 1");
    long long e = std::max(1, ideal.max_generator_degree());
    MonomialIdeal pw = MonomialIdeal::unit(ideal.dim());
    for (long long n = 1; n <= n_max; ++n) {
        pw = n == 1 ? ideal : multiply(pw, ideal);
        if (pw.is_zero()) break;
        int top = top_disagreement_degree(pw, saturate_irrelevant(pw));
        if (top >= 0) e = std::max(e, (top + n) / n);  // ceil((top + 1) / n)
    }
    return e;
}

/// Records for n = 1..n_max. With the default (empirical) cutoff every
/// record satisfies lambda = sigma - tau; a caller-supplied cutoff is
/// used as-is and may break that identity below the stable slope.
inline std::vector<LengthRecord> length_table(const MonomialIdeal& ideal, long long n_max,
                                              std::optional<long long> cutoff = std::nullopt,
                                              CountStrategy strategy = CountStrategy::pivot) {
    detail::require_length_preconditions(ideal);
    if (n_max < 1) throw std::invalid_argument("length_table: n_max must be >= 1");
    long long e = cutoff ? *cutoff : empirical_swanson_e(ideal, n_max);
    if (e < 1) throw std::invalid_argument("length_table: cutoff must be >= 1");

    std::vector<LengthRecord> records;
    records.reserve(static_cast<std::size_t>(n_max));
    MonomialIdeal pw = MonomialIdeal::unit(ideal.dim());
    for (long long n = 1; n <= n_max; ++n) {
        pw = n == 1 ? ideal : multiply(pw, ideal);
        MonomialIdeal sat = saturate_irrelevant(pw);
        int top = pw.is_zero() ? -1 : top_disagreement_degree(pw, sat, strategy);
        GradedCounter counter;
        auto count = [&](const MonomialIdeal& J, long long m) {
            return strategy == CountStrategy::pivot
                       ? counter.ideal_count(J, static_cast<int>(m))
                       : count_graded_piece(J, static_cast<int>(m), strategy);
        };
        LengthRecord rec;
        rec.n = n;
        rec.cutoff_e = e;
        for (long long m = 0; m <= e * n; ++m) {
            rec.sigma += count(sat, m);
            rec.tau += count(pw, m);
        }
        for (long long m = 0; m <= top; ++m) rec.lambda += count(sat, m) - count(pw, m);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace cohlen
