#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cohlen/k3.hpp>

#include <random>

using namespace cohlen;

namespace {
const K3Params kDefaults = K3Params::defaults();
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(K3Params(4, 3, 2, 8));
    CHECK_THROWS_AS(K3Params(0, 3, 2, 8), std::invalid_argument);    // a > 0
    CHECK_THROWS_AS(K3Params(4, 3, 3, 8), std::invalid_argument);    // a^2 - b^2 - c^2 > 0
    CHECK_THROWS_AS(K3Params(6, 3, 4, 10), std::invalid_argument);   // D = 25 is a square
    CHECK_THROWS_AS(K3Params(5, 1, 1, 9), std::invalid_argument);    // lambda2 ~ 6.41 <= 7
    CHECK_THROWS_AS(K3Params(4, 3, 2, 7), std::invalid_argument);    // e <= lambda2
    CHECK_NOTHROW(K3Params(8, 1, 1, 10));                            // lambda2 = 8 + sqrt(2)
    CHECK(kDefaults.radicand() == 13);
    CHECK(kDefaults.lambda2() == QuadraticNumber(Rational(4), Rational(1), 13));
    CHECK(kDefaults.lambda() == QuadraticNumber(Rational(0), Rational(1), 13));
    CHECK(kDefaults.lambda1() == QuadraticNumber(Rational(4), Rational(-1), 13));
}

TEST_CASE("intersection form") {
    CHECK(self_intersection({1, 0, 0}) == BigInt(4));
    CHECK(pairing(kDefaults.hyperplane_class(), kDefaults.curve_class()) == BigInt(16));
    CHECK(self_intersection({4, -3, -2}) == BigInt(12));  // q(8H - C)
    CHECK(pairing({1, 2, 3}, {4, 5, 6}) == BigInt(4 * (4 - 10 - 18)));
}

TEST_CASE("slope comparisons are exact") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.exceeds_slope(8, 1));
    CHECK(!calc.exceeds_slope(7, 1));
    CHECK(calc.exceeds_slope(31, 4));   // (31-16)^2 = 225 > 13*16
    CHECK(!calc.exceeds_slope(30, 4));  // (30-16)^2 = 196 < 208
    CHECK(calc.exceeds_slope(1, 0));
    CHECK(!calc.exceeds_slope(0, 0));

    SUBCASE("exclusivity: never equal for n >= 1") {
        for (long long n = 1; n <= 12; ++n)
            for (long long m = 0; m <= 8 * n; ++m) {
                long long excess = m - 4 * n;
                bool below = excess <= 0 || static_cast<__int128>(excess) * excess <
                                                static_cast<__int128>(13) * n * n;
                CHECK(below != calc.exceeds_slope(m, n));
            }
    }
}

TEST_CASE("floors of lambda multiples and quotients") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.floor_lambda_multiple(1) == 3);
    CHECK(calc.floor_lambda_multiple(2) == 7);
    CHECK(calc.floor_lambda_multiple(10) == 36);
    CHECK(calc.floor_div_lambda(0) == 0);
    CHECK(calc.floor_div_lambda(8) == 2);  // 2*sqrt(13) < 8 < 3*sqrt(13)

    SUBCASE("floor brackets the real value") {
        QuadraticNumber lambda = kDefaults.lambda();
        for (long long l = 1; l <= 200; ++l) {
            QuadraticNumber value =
                QuadraticNumber::from_rational(Rational(l), 13) * lambda;
            Rational fl(calc.floor_lambda_multiple(l));
            CHECK(quad_compare(QuadraticNumber::from_rational(fl, 13), value) < 0);
            CHECK(quad_compare(value, QuadraticNumber::from_rational(fl + Rational(1), 13)) < 0);
        }
    }

    SUBCASE("quotient floor is consistent with multiple floor") {
        for (long long r = 1; r <= 300; ++r) {
            long long t = calc.floor_div_lambda(r);
            CHECK(calc.floor_lambda_multiple(t) <= r - 1);
            CHECK(calc.floor_lambda_multiple(t + 1) >= r);
        }
    }

    SUBCASE("floors under a shifted slope (a = 8, D = 2)") {
        BlowupCohomology other(K3Params(8, 1, 1, 10));
        // lambda = 4 + sqrt(2): floor(l*lambda) = 4l + floor(l*sqrt(2))
        CHECK(other.floor_lambda_multiple(1) == 5);
        CHECK(other.floor_lambda_multiple(5) == 27);  // 20 + floor(7.07)
        CHECK(other.floor_div_lambda(11) == 2);       // 2*(5.41..) = 10.8 < 11
        for (long long r = 1; r <= 100; ++r) {
            long long t = other.floor_div_lambda(r);
            CHECK(other.floor_lambda_multiple(t) <= r - 1);
            CHECK(other.floor_lambda_multiple(t + 1) >= r);
        }
    }
}

TEST_CASE("surface section counts") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.surface_sections(8, 1) == BigInt(8));
    CHECK(calc.surface_sections(7, 1) == BigInt(0));
    CHECK(calc.surface_sections(16, 2) == BigInt(26));
    CHECK_THROWS_AS(calc.surface_sections(8, 0), std::invalid_argument);
}

TEST_CASE("blow-up section counts") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.blowup_sections(BlowupClass(8, 1)) == BigInt(43));
    CHECK_THROWS_AS(BlowupClass(8, -1), std::invalid_argument);
    CHECK(calc.blowup_sections(3, 1) == BigInt(0));
    CHECK(calc.blowup_sections(8, 1) == BigInt(43));    // C(7,3) + 8
    CHECK(calc.blowup_sections(16, 2) == BigInt(295));  // (165 + 104) + 26
    CHECK(calc.blowup_sections(5, 0) == binomial(8, 3));
    CHECK(calc.blowup_sections(-2, 0) == BigInt(0));

    SUBCASE("monotone in the hyperplane twist") {
        for (long long n = 0; n <= 20; ++n) {
            BigInt prev;
            for (long long m = 0; m <= 200; ++m) {
                BigInt cur = calc.blowup_sections(m, n);
                CHECK(cur >= prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("sigma by recursion: frozen small values") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.sigma_by_recursion(0) == BigInt(1));
    CHECK(calc.sigma_by_recursion(1) == BigInt(78));   // 1+4+10+20 below, 43 at m = 8
    CHECK(calc.sigma_by_recursion(2) == BigInt(781));  // unrolled by hand
}

TEST_CASE("regrouped-sum ingredients") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.half_self_intersection(1, 4) == BigInt(6));
    CHECK(calc.cumulative_half_self_intersection(0, 5) == BigInt(0));
    CHECK(calc.cumulative_half_self_intersection(-3, 5) == BigInt(0));
    CHECK(calc.projective_sections_sum(1) == BigInt(70));  // 1+4+10+20+35
    CHECK(calc.euler_constant_sum(1) == BigInt(2));
    CHECK(calc.euler_constant_sum(2) == BigInt(12));

    SUBCASE("cumulative sums telescope") {
        std::mt19937_64 rng(2025);
        for (int iter = 0; iter < 60; ++iter) {
            long long s = static_cast<long long>(rng() % 20);
            long long r = static_cast<long long>(rng() % 40);
            BigInt sum;
            for (long long l = 1; l <= s; ++l) sum += calc.half_self_intersection(l, r);
            CHECK(sum == calc.cumulative_half_self_intersection(s, r));
        }
    }
}

TEST_CASE("the regrouped ranges are valid: floor(lambda n) < (e-4)n") {
    BlowupCohomology calc(kDefaults);
    for (long long n = 1; n <= 100; ++n)
        CHECK(calc.floor_lambda_multiple(n) < (kDefaults.cutoff_e() - 4) * n);
    BlowupCohomology other(K3Params(8, 1, 1, 10));
    for (long long n = 1; n <= 100; ++n)
        CHECK(other.floor_lambda_multiple(n) < (other.params().cutoff_e() - 4) * n);
}

TEST_CASE("the two sigma pipelines agree exactly") {
    BlowupCohomology calc(kDefaults);
    CHECK(calc.sigma_by_decomposition(1) == BigInt(78));
    for (long long n = 1; n <= 24; ++n)
        CHECK(calc.sigma_by_decomposition(n) == calc.sigma_by_recursion(n));

    // a different valid configuration exercises the a != 4 branches of
    // the floors and the slope tests
    BlowupCohomology other(K3Params(8, 1, 1, 10));
    for (long long n = 1; n <= 12; ++n)
        CHECK(other.sigma_by_decomposition(n) == other.sigma_by_recursion(n));
}

TEST_CASE("closed-form limit") {
    QuadraticNumber limit = closed_form_limit(kDefaults);
    CHECK(limit == QuadraticNumber(Rational(56, 3), Rational(13, 3), 13));
    CHECK(!limit.is_rational());
    CHECK(limit.to_decimal_string(4) == "34.2907");

    SUBCASE("the radical part does not depend on the cutoff") {
        for (long long e = 8; e <= 12; ++e) {
            QuadraticNumber l = closed_form_limit(K3Params(4, 3, 2, e));
            CHECK(l.radical_part() == Rational(13, 3));
            if (e > 8) CHECK(l.rational_part() != Rational(56, 3));
        }
    }

    SUBCASE("a != 4 is rejected with both ambiguous variants") {
        CHECK_THROWS_WITH_AS(closed_form_limit(K3Params(8, 1, 1, 10)),
                             doctest::Contains("ambiguous"), std::domain_error);
    }
}

TEST_CASE("convergence table") {
    auto table = convergence_table(kDefaults, 16);
    REQUIRE(table.rows.size() == 16);
    CHECK(table.rows[0].sigma == BigInt(78));
    CHECK(table.rows[0].ratio == Rational(78));
    CHECK(!table.rows[0].extrapolant.has_value());
    REQUIRE(table.rows[15].extrapolant.has_value());
    CHECK(*table.rows[15].extrapolant ==
          Rational(2) * table.rows[15].ratio - table.rows[7].ratio);
    REQUIRE(table.closed_form.has_value());
    CHECK(table.closed_form_decimal.substr(0, 7) == "34.2907");
    CHECK(!table.final_extrapolant_decimal.empty());
    CHECK_THROWS_AS(convergence_table(kDefaults, 4), std::invalid_argument);

    // extrapolants drift toward the closed form as n grows
    QuadraticNumber limit = *table.closed_form;
    auto err = [&](const Rational& v) {
        return (QuadraticNumber::from_rational(v, 13) - limit).abs();
    };
    CHECK(quad_compare(err(*table.rows[15].extrapolant), err(*table.rows[7].extrapolant)) < 0);
}
