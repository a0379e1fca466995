#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cohlen/counting.hpp>
#include <cohlen/monomial.hpp>

#include <random>

using namespace cohlen;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(int dim, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(Monomial(std::move(g)));
    return MonomialIdeal(dim, std::move(ms));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int dim, int max_gens, int max_exp) {
    std::uniform_int_distribution<int> gens_dist(0, max_gens);
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    std::vector<Monomial> gens;
    int count = gens_dist(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(static_cast<std::size_t>(dim));
        for (auto& v : e) v = exp_dist(rng);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(dim, std::move(gens));
}

// membership-equality of two ideals, checked over all monomials up to a
// degree where both staircases are determined
bool same_ideal_by_membership(const MonomialIdeal& a, const MonomialIdeal& b) {
    int top = std::max(a.max_generator_degree(), b.max_generator_degree());
    bool equal = true;
    for (int m = 0; m <= top && equal; ++m)
        detail::for_each_monomial_of_degree(a.dim(), m, [&](const std::vector<int>& e) {
            Monomial u(e);
            if (a.contains(u) != b.contains(u)) equal = false;
        });
    return equal;
}

// brute-force saturation: candidates divide the generator lcm, and
// u is in I : m^inf iff u * x_i^(max exponent of x_i) lies in I for all i
MonomialIdeal brute_force_saturation(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return ideal;
    Monomial big = ideal.generator_lcm();
    std::vector<Monomial> kept;
    std::vector<int> e(static_cast<std::size_t>(ideal.dim()), 0);
    while (true) {
        Monomial u(e);
        bool in_sat = true;
        for (int i = 0; i < ideal.dim() && in_sat; ++i) {
            std::vector<int> shifted = u.exponents();
            shifted[static_cast<std::size_t>(i)] += std::max(big[i], 1);
            in_sat = ideal.contains(Monomial(shifted));
        }
        if (in_sat) kept.push_back(u);
        // odometer over divisors of the lcm
        int i = 0;
        while (i < ideal.dim() && e[static_cast<std::size_t>(i)] == big[i]) {
            e[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == ideal.dim()) break;
        ++e[static_cast<std::size_t>(i)];
    }
    return MonomialIdeal(ideal.dim(), std::move(kept));
}

}  // namespace

TEST_CASE("monomial basics") {
    CHECK(mono({2, 1}).degree() == 3);
    CHECK(mono({2, 0}).divides(mono({2, 1})));
    CHECK(!mono({2, 1}).divides(mono({2, 0})));
    CHECK(lcm(mono({2, 0}), mono({0, 3})) == mono({2, 3}));
    CHECK(mono({1, 1}) * mono({2, 0}) == mono({3, 1}));
    CHECK_THROWS_AS(Monomial({-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(mono({1}) * mono({1, 0}), std::invalid_argument);
}

TEST_CASE("minimalize keeps the divisibility antichain") {
    // {x^2, x^2 y, y} -> {x^2, y}
    auto I = ideal(2, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(I.generators() == std::vector<Monomial>{mono({0, 1}), mono({2, 0})});

    CHECK(MonomialIdeal::zero(2).is_zero());
    CHECK(MonomialIdeal::unit(2).is_unit());
    CHECK(ideal(2, {{0, 0}, {1, 0}}).generators().size() == 1);  // unit swallows all

    CHECK_THROWS_AS(ideal(2, {{1, 0}, {1, 0, 0}}), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Monomial> raw;
        std::uniform_int_distribution<int> exp_dist(0, 4);
        for (int i = 0; i < 6; ++i) {
            std::vector<int> e(3);
            for (auto& v : e) v = exp_dist(rng);
            raw.push_back(Monomial(std::move(e)));
        }
        MonomialIdeal I2(3, raw);
        // every input generator still belongs to the minimalized ideal
        for (const Monomial& g : raw) CHECK(I2.contains(g));
        // antichain: no generator divides another
        for (const Monomial& a : I2.generators())
            for (const Monomial& b : I2.generators())
                if (!(a == b)) CHECK(!a.divides(b));
    }
}

TEST_CASE("products and powers") {
    auto m2 = ideal(2, {{1, 0}, {0, 1}});
    auto sq = multiply(m2, m2);
    CHECK(sq == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(power(m2, 1) == m2);
    CHECK_THROWS_AS(power(m2, 0), std::invalid_argument);

    // (x^2, xy)^n = x^n * (x,y)^n, generator by generator
    auto I = ideal(2, {{2, 0}, {1, 1}});
    for (long long n = 1; n <= 5; ++n) {
        auto In = power(I, n);
        std::vector<Monomial> expected;
        for (long long j = 0; j <= n; ++j)
            expected.push_back(mono({static_cast<int>(n + j), static_cast<int>(n - j)}));
        CHECK(In == MonomialIdeal(2, std::move(expected)));
    }

    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 30; ++iter) {
        auto J = random_ideal(rng, 2, 3, 3);
        if (J.is_zero()) continue;
        for (long long a = 1; a <= 3; ++a)
            for (long long b = 1; a + b <= 6 && b <= 3; ++b)
                CHECK(multiply(power(J, a), power(J, b)) == power(J, a + b));
    }
}

TEST_CASE("colon by a variable power") {
    // (x^2 y, z) : y^inf = (x^2, z)
    auto I = ideal(3, {{2, 1, 0}, {0, 0, 1}});
    CHECK(colon_variable_infinity(I, 1) == ideal(3, {{2, 0, 0}, {0, 0, 1}}));
    // (x) : x^inf = (1)
    CHECK(colon_variable_infinity(ideal(2, {{1, 0}}), 0).is_unit());
    CHECK_THROWS_AS(colon_variable_infinity(I, 3), std::out_of_range);

    // brute force: u in I : x_i^inf iff u * x_i^K in I with K = max exponent
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        auto J = random_ideal(rng, 3, 4, 3);
        if (J.is_zero()) continue;
        int K = 0;
        for (const Monomial& g : J.generators())
            for (int i = 0; i < 3; ++i) K = std::max(K, g[i]);
        for (int var = 0; var < 3; ++var) {
            auto C = colon_variable_infinity(J, var);
            bool ok = true;
            for (int m = 0; m <= J.max_generator_degree() && ok; ++m)
                detail::for_each_monomial_of_degree(3, m, [&](const std::vector<int>& e) {
                    std::vector<int> shifted = e;
                    shifted[static_cast<std::size_t>(var)] += K;
                    if (C.contains(Monomial(e)) != J.contains(Monomial(shifted))) ok = false;
                });
            CHECK(ok);
        }
    }
}

TEST_CASE("intersection") {
    CHECK(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
    auto I = ideal(2, {{2, 0}, {1, 1}});
    CHECK(intersect(I, I) == I);
    CHECK(intersect(I, MonomialIdeal::zero(2)).is_zero());
    CHECK(intersect(I, MonomialIdeal::unit(2)) == I);

    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        auto A = random_ideal(rng, 3, 3, 3);
        auto B = random_ideal(rng, 3, 3, 3);
        auto C = intersect(A, B);
        for (int m = 0; m <= 8; ++m)
            detail::for_each_monomial_of_degree(3, m, [&](const std::vector<int>& e) {
                Monomial u(e);
                CHECK((A.contains(u) && B.contains(u)) == C.contains(u));
            });
    }
}

TEST_CASE("saturation at the irrelevant ideal") {
    CHECK(saturate_irrelevant(ideal(2, {{2, 0}, {1, 1}})) == ideal(2, {{1, 0}}));
    for (long long k = 1; k <= 4; ++k)
        CHECK(saturate_irrelevant(power(ideal(2, {{1, 0}, {0, 1}}), k)).is_unit());
    CHECK(saturate_irrelevant(ideal(2, {{1, 0}})) == ideal(2, {{1, 0}}));
    CHECK(saturate_irrelevant(MonomialIdeal::zero(3)).is_zero());

    SUBCASE("idempotent and extensive") {
        std::mt19937_64 rng(53);
        for (int iter = 0; iter < 60; ++iter) {
            auto I = random_ideal(rng, 3, 4, 4);
            auto S = saturate_irrelevant(I);
            CHECK(S.contains(I));
            CHECK(saturate_irrelevant(S) == S);
        }
    }

    SUBCASE("matches the brute-force variable-power test") {
        std::mt19937_64 rng(59);
        for (int iter = 0; iter < 60; ++iter) {
            auto I = random_ideal(rng, 3, 4, 4);
            CHECK(saturate_irrelevant(I) == brute_force_saturation(I));
        }
        // staircases agree, not just generator lists
        for (int iter = 0; iter < 20; ++iter) {
            auto I = random_ideal(rng, 2, 4, 4);
            CHECK(same_ideal_by_membership(saturate_irrelevant(I), brute_force_saturation(I)));
        }
    }
}

TEST_CASE("graded piece counts") {
    auto I = ideal(2, {{2, 0}, {1, 1}, {0, 2}});
    CHECK(count_graded_piece(I, 3) == BigInt(4));
    CHECK(count_graded_piece(MonomialIdeal::zero(2), 5) == BigInt(0));
    CHECK(count_graded_piece(ideal(2, {{1, 0}}), 5) == BigInt(5));

    CHECK(count_standard(ideal(2, {{1, 0}, {0, 1}}), 3) == BigInt(0));
    CHECK(count_standard(MonomialIdeal::zero(2), 3) == BigInt(4));
    CHECK(count_standard(ideal(2, {{2, 0}, {0, 3}}), 2) == BigInt(2));  // xy, y^2 survive

    SUBCASE("strategies agree on random instances") {
        std::mt19937_64 rng(61);
        for (int iter = 0; iter < 200; ++iter) {
            int dim = 2 + static_cast<int>(rng() % 3);
            auto J = random_ideal(rng, dim, 4, 4);
            int m = static_cast<int>(rng() % 21);
            CHECK(count_graded_piece(J, m, CountStrategy::enumerate) ==
                  count_graded_piece(J, m, CountStrategy::pivot));
        }
    }

    SUBCASE("ideal and standard counts partition each degree") {
        std::mt19937_64 rng(67);
        for (int iter = 0; iter < 100; ++iter) {
            auto J = random_ideal(rng, 3, 4, 4);
            int m = static_cast<int>(rng() % 12);
            CHECK(count_graded_piece(J, m) + count_standard(J, m) == monomial_space_dim(3, m));
        }
    }
}

TEST_CASE("top disagreement degree") {
    CHECK(top_disagreement_degree(ideal(2, {{2, 0}, {1, 1}}), ideal(2, {{1, 0}})) == 1);
    auto I = ideal(2, {{2, 0}, {1, 1}});
    CHECK(top_disagreement_degree(I, I) == -1);
    CHECK(top_disagreement_degree(power(ideal(2, {{1, 0}, {0, 1}}), 4), MonomialIdeal::unit(2)) ==
          3);
    CHECK_THROWS_AS(top_disagreement_degree(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})),
                    std::invalid_argument);
    // infinite-length quotient is reported, not looped on
    CHECK_THROWS_AS(top_disagreement_degree(ideal(2, {{2, 0}}), ideal(2, {{1, 0}})),
                    std::invalid_argument);
    // saturation pairs always terminate
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 40; ++iter) {
        auto J = random_ideal(rng, 3, 4, 3);
        auto S = saturate_irrelevant(J);
        int top = top_disagreement_degree(J, S);
        CHECK(top >= -1);
        if (top >= 0) {
            GradedCounter counter;
            CHECK(counter.ideal_count(S, top) > counter.ideal_count(J, top));
            CHECK(counter.ideal_count(S, top + 1) == counter.ideal_count(J, top + 1));
        }
    }
}
