#include "derange/analysis.hpp"

#include "derange/families.hpp"
#include "golden_tables.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace derange;

TEST_CASE("symmetry detection") {
    CHECK(is_symmetric(IntPoly{0, 1, 57, 57, 1}, 5));
    CHECK_FALSE(is_symmetric(IntPoly{1, 16, 7}, 2));
    CHECK_FALSE(is_symmetric(IntPoly{1, 16, 7}, 5));
    for (int n = 0; n < 6; ++n) CHECK(is_symmetric(IntPoly{}, n));
}

TEST_CASE("peak sets") {
    auto [u1, p1] = unimodal_peaks(IntPoly{0, 16, 144, 72, 1});
    CHECK(u1);
    CHECK(p1 == std::vector<int>{2});

    auto [u2, p2] = unimodal_peaks(IntPoly{1, 61, 115, 15});
    CHECK(u2);
    CHECK(p2 == std::vector<int>{2});

    auto [u3, p3] = unimodal_peaks(IntPoly{5});
    CHECK(u3);
    CHECK(p3 == std::vector<int>{0});

    auto [u4, p4] = unimodal_peaks(IntPoly{1, 0, 1});
    CHECK_FALSE(u4);
    CHECK(p4.empty());

    // plateau yields several witnesses
    auto [u5, p5] = unimodal_peaks(IntPoly{1, 2, 2, 1});
    CHECK(u5);
    CHECK(p5 == std::vector<int>{1, 2});
}

TEST_CASE("log-concavity and internal zeros") {
    CHECK(is_log_concave(IntPoly{0, 7, 16, 1}));
    CHECK_FALSE(is_log_concave(IntPoly{0, 1, 0, 1}));
    CHECK(has_internal_zeros(IntPoly{1, 0, 1}));
    CHECK_FALSE(has_internal_zeros(IntPoly{0, 0, 3, 4}));
}

TEST_CASE("gamma extraction") {
    GammaVector g = gamma_extract(IntPoly{0, 15, 87, 15}, 4);
    CHECK(g.gammas == std::vector<Int>{0, 15, 57});
    CHECK(g.reconstruct() == IntPoly{0, 15, 87, 15});

    GammaVector ga = gamma_extract(IntPoly{1, 4, 1}, 2);
    CHECK(ga.gammas == std::vector<Int>{1, 2});

    GammaVector binom = gamma_extract(pow(IntPoly{1, 1}, 5), 5);
    CHECK(binom.gammas == std::vector<Int>{1, 0, 0});

    CHECK_THROWS_AS(gamma_extract(IntPoly{1, 16, 7}, 2), std::invalid_argument);

    // reconstruction round-trip on the frozen tables
    for (int n = 0; n <= 7; ++n) {
        if (!golden::f_plus[n].is_zero())
            CHECK(gamma_extract(golden::f_plus[n], n).reconstruct() == golden::f_plus[n]);
        if (!golden::f_minus[n].is_zero())
            CHECK(gamma_extract(golden::f_minus[n], n + 1).reconstruct() == golden::f_minus[n]);
    }
}

TEST_CASE("exact real-rootedness") {
    CHECK(sturm_real_rooted(IntPoly{0, 15, 87, 15}));  // 3x(5 + 29x + 5x^2), discriminant 741
    CHECK_FALSE(sturm_real_rooted(IntPoly{1, 0, 1}));
    CHECK(sturm_real_rooted(IntPoly{0, 3, 1}));  // roots 0 and -3
    CHECK(sturm_real_rooted(pow(IntPoly{1, 1}, 4)));
    CHECK(sturm_real_rooted(IntPoly{-2, 1}));
    CHECK(sturm_real_rooted(IntPoly{7}));
    CHECK_FALSE(sturm_real_rooted(IntPoly{1, 1, 1}));
    CHECK_FALSE(sturm_real_rooted(IntPoly{1, 0, 0, 1, 1}));
    CHECK_THROWS_AS(sturm_real_rooted(IntPoly{}), std::invalid_argument);

    // repeated roots
    CHECK(sturm_real_rooted(IntPoly{0, 0, 1} * pow(IntPoly{-1, 1}, 3)));

    // quadratic discriminant oracle
    for (int b = -6; b <= 6; ++b)
        for (int c = -6; c <= 6; ++c) {
            IntPoly q{c, b, 1};
            CHECK(sturm_real_rooted(q) == (b * b - 4 * c >= 0));
        }
}

TEST_CASE("toeplitz minors as a disproof device") {
    CHECK(toeplitz_minor_check(golden::b_plus[5], 3));
    CHECK(toeplitz_minor_check(golden::b_minus[5], 3));
    // x^2 + x + 1 passes at order 2 but a 3x3 minor is negative
    CHECK(toeplitz_minor_check(IntPoly{1, 1, 1}, 2));
    CHECK_FALSE(toeplitz_minor_check(IntPoly{1, 1, 1}, 3));
    CHECK(toeplitz_minor_check(pow(IntPoly{1, 1}, 3), 4));
    CHECK_THROWS_AS(toeplitz_minor_check(IntPoly{-1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_minor_check(IntPoly{1}, 0), std::invalid_argument);
}

TEST_CASE("shape report") {
    ShapeReport r = shape_report(IntPoly{0, 1, 13, 1});
    CHECK(r.symmetric);
    CHECK(r.center_times_two == 4);
    CHECK(r.unimodal);
    CHECK(r.log_concave);
    CHECK_FALSE(r.internal_zeros);
    CHECK(r.gamma_nonnegative.value());
    CHECK(r.real_rooted.value());

    ShapeReport asym = shape_report(IntPoly{1, 16, 7});
    CHECK_FALSE(asym.symmetric);
    CHECK_FALSE(asym.center_times_two.has_value());
    CHECK_FALSE(asym.gamma_nonnegative.has_value());

    ShapeReport zero = shape_report(IntPoly{});
    CHECK(zero.zero_polynomial);
    CHECK(zero.symmetric);
    CHECK_FALSE(zero.center_times_two.has_value());

    // half-integer center
    ShapeReport shifted = shape_report(IntPoly{0, 2, 2});
    CHECK(shifted.symmetric);
    CHECK(shifted.center_times_two == 3);
}

TEST_CASE("shape chain on the computed families") {
    FamilyCalculator calc;
    for (int n = 1; n <= 8; ++n) {
        for (Family f : {Family::BPlus, Family::BMinus, Family::FPlus, Family::FMinus,
                         Family::DB, Family::A, Family::DA, Family::B}) {
            IntPoly p = calc.value(f, n);
            if (p.is_zero()) continue;
            REQUIRE(sturm_real_rooted(p));
            CHECK(is_log_concave(p));
            CHECK(unimodal_peaks(p).first);
            CHECK_FALSE(has_internal_zeros(p));
            CHECK(toeplitz_minor_check(p, 2));
            // the dilation operator preserves each property here
            for (int r : {2, 3}) {
                IntPoly er = er_operator(p, r);
                if (er.is_zero()) continue;
                CHECK(sturm_real_rooted(er));
                CHECK(is_log_concave(er));
                CHECK(unimodal_peaks(er).first);
            }
        }
    }
}

TEST_CASE("peak positions of the half families") {
    FamilyCalculator calc;
    for (int n = 2; n <= 10; ++n) {
        auto peaks_plus = unimodal_peaks(calc.value(Family::BPlus, n)).second;
        auto peaks_minus = unimodal_peaks(calc.value(Family::BMinus, n)).second;
        CHECK(std::count(peaks_plus.begin(), peaks_plus.end(), n / 2) == 1);
        CHECK(std::count(peaks_minus.begin(), peaks_minus.end(), (n + 1) / 2) == 1);
    }
    for (int n = 1; n <= 8; ++n) {
        auto peaks = unimodal_peaks(calc.value(Family::DB, n)).second;
        CHECK(std::count(peaks.begin(), peaks.end(), (n + 1) / 2) == 1);
    }
}
