#pragma once

/**
 * @file counting.hpp
 * @brief Exact graded-piece counting for monomial ideals.
 *
 * Two independent strategies compute dim_k (I)_m:
 *
 *  - `enumerate`: walk every degree-m exponent vector and test membership
 *    by divisibility. Simple, and the reference the fast path is checked
 *    against.
 *
 *  - `pivot`: count the standard monomials (the complement) by the
 *    variable-splitting recursion
 *        std(I, m) = std(I + (x_i), m) + std(I : x_i, m - 1),
 *    which partitions degree-m monomials outside I by whether x_i divides
 *    them. Pure-power ideals are closed out by a bounded-box convolution.
 *    Subproblems are memoized per counter instance.
 *
 * Both are exact; dim (I)_m + std(I, m) = C(m+d-1, d-1) ties them together.
 */

#include <cohlen/bigint.hpp>
#include <cohlen/monomial.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cohlen {

enum class CountStrategy { enumerate, pivot };

/// Number of monomials of total degree m in d variables: C(m+d-1, d-1).
inline BigInt monomial_space_dim(int vars, int m) {
    if (m < 0) return BigInt();
    return binomial(static_cast<long long>(m) + vars - 1, vars - 1);
}

namespace detail {

/// Visits all exponent vectors of total degree m in d variables.
template <typename Fn>
void for_each_monomial_of_degree(int vars, int m, Fn&& fn) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[0] = m;
    while (true) {
        fn(e);
        // next composition: move one unit from the leftmost positive
        // entry (other than the tail) rightward
        int i = 0;
        while (i < vars - 1 && e[static_cast<std::size_t>(i)] == 0) ++i;
        if (i == vars - 1) break;
        int head = e[static_cast<std::size_t>(i)];
        e[static_cast<std::size_t>(i)] = 0;
        e[0] = head - 1;
        ++e[static_cast<std::size_t>(i) + 1];
    }
}

}  // namespace detail

/// Counts standard monomials (degree-m monomials NOT in I) and graded
/// pieces of I, with a memo table shared across queries. One counter per
/// computation run; instances are independent.
class GradedCounter {
public:
    BigInt standard_count(const MonomialIdeal& ideal, int m) {
        if (m < 0) return BigInt();
        if (ideal.is_unit()) return BigInt();
        if (ideal.is_zero()) return monomial_space_dim(ideal.dim(), m);
        if (is_pure_power(ideal)) return boxed_count(ideal, m);

        Key key{flatten(ideal), m};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int pivot = pivot_variable(ideal);
        BigInt result = standard_count(add_variable(ideal, pivot), m) +
                        standard_count(colon_variable(ideal, pivot), m - 1);
        memo_.emplace(std::move(key), result);
        return result;
    }

    BigInt ideal_count(const MonomialIdeal& ideal, int m) {
        if (m < 0) return BigInt();
        return monomial_space_dim(ideal.dim(), m) - standard_count(ideal, m);
    }

private:
    using Key = std::pair<std::vector<int>, int>;
    std::map<Key, BigInt> memo_;

    static std::vector<int> flatten(const MonomialIdeal& ideal) {
        std::vector<int> flat;
        flat.reserve(ideal.generators().size() * static_cast<std::size_t>(ideal.dim()));
        for (const Monomial& g : ideal.generators())
            flat.insert(flat.end(), g.exponents().begin(), g.exponents().end());
        return flat;
    }

    static bool is_pure_power(const MonomialIdeal& ideal) {
        for (const Monomial& g : ideal.generators()) {
            int support = 0;
            for (int i = 0; i < ideal.dim(); ++i)
                if (g[i] > 0) ++support;
            if (support > 1) return false;
        }
        return true;
    }

    // Every generator is x_i^{a_i}: count compositions of m with each
    // bounded coordinate held below its pure-power exponent.
    static BigInt boxed_count(const MonomialIdeal& ideal, int m) {
        std::vector<int> bound(static_cast<std::size_t>(ideal.dim()), -1);  // -1: unbounded
        for (const Monomial& g : ideal.generators())
            for (int i = 0; i < ideal.dim(); ++i)
                if (g[i] > 0) bound[static_cast<std::size_t>(i)] = g[i];
        std::vector<BigInt> table(static_cast<std::size_t>(m) + 1);
        table[0] = BigInt(1);
        for (int b : bound) {
            std::vector<BigInt> next(table.size());
            BigInt window;  // running sum of table[t - cap + 1 .. t]
            for (int t = 0; t <= m; ++t) {
                window += table[static_cast<std::size_t>(t)];
                if (b >= 0 && t - b >= 0) window -= table[static_cast<std::size_t>(t - b)];
                next[static_cast<std::size_t>(t)] = window;
            }
            table = std::move(next);
        }
        return table[static_cast<std::size_t>(m)];
    }

    // Highest exponent among generators of degree >= 2. Restricting to
    // those generators guarantees both branches shrink (adding x_i drops
    // a generator of degree >= 2; the colon lowers an exponent).
    static int pivot_variable(const MonomialIdeal& ideal) {
        int best_var = -1, best_exp = 0;
        for (const Monomial& g : ideal.generators()) {
            if (g.degree() < 2) continue;
            for (int i = 0; i < ideal.dim(); ++i)
                if (g[i] > best_exp) {
                    best_exp = g[i];
                    best_var = i;
                }
        }
        if (best_var < 0) throw std::logic_error("pivot_variable: no splittable generator");
        return best_var;
    }
};

/// dim_k (I)_m — the number of degree-m monomials lying in I.
inline BigInt count_graded_piece(const MonomialIdeal& ideal, int m,
                                 CountStrategy strategy = CountStrategy::pivot) {
    if (m < 0) return BigInt();
    if (strategy == CountStrategy::enumerate) {
        long long count = 0;
        detail::for_each_monomial_of_degree(ideal.dim(), m, [&](const std::vector<int>& e) {
            if (ideal.contains(Monomial(e))) ++count;
        });
        return BigInt(count);
    }
    GradedCounter counter;
    return counter.ideal_count(ideal, m);
}

/// dim_k (R/I)_m = C(m+d-1, d-1) - dim_k (I)_m.
inline BigInt count_standard(const MonomialIdeal& ideal, int m,
                             CountStrategy strategy = CountStrategy::pivot) {
    if (m < 0) return BigInt();
    return monomial_space_dim(ideal.dim(), m) - count_graded_piece(ideal, m, strategy);
}

/// Largest degree m with dim (J)_m > dim (I)_m for nested ideals I <= J,
/// or -1 when the graded pieces agree everywhere.
///
/// The scan may stop at the first degree m* >= maxdeg(J) with equal
/// counts: any degree-(m*+1) monomial of J is x_i times a degree-m*
/// monomial of J (its generator has degree <= m*), which by equality lies
/// in I, so agreement propagates upward. If J/I has infinite length the
/// scan would never stop; that is detected via the lcm-degree bound on
/// sat(I) \ I and reported as an error.
inline int top_disagreement_degree(const MonomialIdeal& inner, const MonomialIdeal& outer,
                                   CountStrategy strategy = CountStrategy::pivot) {
    if (inner.dim() != outer.dim())
        throw std::invalid_argument("top_disagreement_degree: ambient dimension mismatch");
    if (!outer.contains(inner))
        throw std::invalid_argument("top_disagreement_degree: inner ideal not contained in outer");

    GradedCounter counter;
    auto count = [&](const MonomialIdeal& ideal, int m) {
        return strategy == CountStrategy::pivot ? counter.ideal_count(ideal, m)
                                                : count_graded_piece(ideal, m, strategy);
    };

    const int stop_floor = outer.max_generator_degree();
    const int safety = std::max(stop_floor, inner.generator_lcm().degree());
    int last = -1;
    for (int m = 0;; ++m) {
        BigInt ci = count(inner, m);
        BigInt co = count(outer, m);
        if (ci > co)
            throw std::logic_error("top_disagreement_degree: containment violated by counts");
        if (co > ci)
            last = m;
        else if (m >= stop_floor)
            return last;
        if (m > safety && co > ci)
            throw std::invalid_argument(
                "top_disagreement_degree: quotient has infinite length (no stable degree)");
    }
}

}  // namespace cohlen
