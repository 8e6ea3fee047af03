#include "derange/families.hpp"

#include "golden_tables.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>

using namespace derange;

namespace {
const FamilyCalculator& calc() {
    static FamilyCalculator c;
    return c;
}
}  // namespace

TEST_CASE("eulerian polynomials") {
    CHECK(calc().value(Family::A, 1) == IntPoly{1});
    CHECK(calc().value(Family::A, 3) == IntPoly{1, 4, 1});
    CHECK(calc().value(Family::A, 4) == IntPoly{1, 11, 11, 1});
    CHECK(calc().value(Family::B, 0) == IntPoly{1});
    CHECK(calc().value(Family::B, 2) == IntPoly{1, 6, 1});
    CHECK(calc().value(Family::B, 3) == IntPoly{1, 23, 23, 1});
}

TEST_CASE("derangement polynomials") {
    CHECK(calc().value(Family::DA, 0) == IntPoly{1});
    CHECK(calc().value(Family::DA, 2) == IntPoly{0, 1});
    CHECK(calc().value(Family::DA, 3) == IntPoly{0, 1, 1});
    CHECK(calc().value(Family::DB, 1) == IntPoly{0, 1});
    CHECK(calc().value(Family::DB, 2) == IntPoly{0, 4, 1});
    CHECK(calc().value(Family::DB, 4) == IntPoly{0, 16, 144, 72, 1});
}

TEST_CASE("golden half tables") {
    for (int n = 0; n <= 7; ++n) {
        CHECK(calc().value(Family::FPlus, n) == golden::f_plus[n]);
        CHECK(calc().value(Family::FMinus, n) == golden::f_minus[n]);
        CHECK(calc().value(Family::XiPlus, n) == golden::xi_plus[n]);
        CHECK(calc().value(Family::XiMinus, n) == golden::xi_minus[n]);
    }
    for (int n = 0; n <= 6; ++n) {
        CHECK(calc().value(Family::BPlus, n) == golden::b_plus[n]);
        CHECK(calc().value(Family::BMinus, n) == golden::b_minus[n]);
    }
}

TEST_CASE("composition formula by hand at n = 2") {
    // terms: (2) gives x; (0,2) gives x(1+x); (0,1,1) gives 2x
    CHECK(main_formula(2, calc()) == IntPoly{0, 4, 1});
    CHECK(main_formula(0, calc()) == IntPoly{1});
    CHECK(main_formula(4, calc()) == IntPoly{0, 16, 144, 72, 1});
}

TEST_CASE("symmetric decomposition") {
    auto [plus, minus] = symmetric_decompose(IntPoly{0, 8, 20, 1}, 3);
    CHECK(plus == IntPoly{0, 7, 7});
    CHECK(minus == IntPoly{0, 1, 13, 1});

    auto [zp, zm] = symmetric_decompose(IntPoly{}, 5);
    CHECK(zp.is_zero());
    CHECK(zm.is_zero());

    // a polynomial already symmetric about n/2 splits as (p, 0)
    IntPoly sym{1, 4, 1};
    auto [sp, sm] = symmetric_decompose(sym, 2);
    CHECK(sp == sym);
    CHECK(sm.is_zero());

    CHECK_THROWS_AS(symmetric_decompose(IntPoly{0, 0, 0, 0, 1}, 2), std::invalid_argument);
}

TEST_CASE("gamma-type family expansions") {
    CHECK(calc().value(Family::GammaA, 3) == IntPoly{1, 2});
    CHECK(calc().value(Family::XiA, 0) == IntPoly{1});
    CHECK(calc().value(Family::XiA, 3) == IntPoly{0, 1});
    CHECK_THROWS_AS(calc().compute(Family::GammaA, 0), std::invalid_argument);
}

TEST_CASE("coefficient recurrences") {
    CHECK(coeff_recurrence_check_plus(2, 1, calc()));
    CHECK(coeff_recurrence_check_plus(4, 2, calc()));
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(coeff_recurrence_check_plus(n, k, calc()));
            CHECK(coeff_recurrence_check_minus(n, k, calc()));
        }
}

TEST_CASE("family symmetries and sums") {
    for (int n = 0; n <= 10; ++n) {
        IntPoly fplus = calc().value(Family::FPlus, n);
        IntPoly fminus = calc().value(Family::FMinus, n);
        if (!fplus.is_zero()) CHECK(fplus.reversed(n) == fplus);
        if (!fminus.is_zero()) CHECK(fminus.reversed(n + 1) == fminus);
        CHECK(fplus + fminus == calc().value(Family::DB, n));
        if (n >= 1) {
            IntPoly a = calc().value(Family::A, n);
            CHECK(a.reversed(n - 1) == a);
        }
        IntPoly d = calc().value(Family::DA, n);
        if (!d.is_zero()) CHECK(d.reversed(n) == d);
        CHECK(calc().value(Family::BPlus, n) + calc().value(Family::BMinus, n) ==
              calc().value(Family::B, n));
    }
}

TEST_CASE("method sets recorded per index") {
    FamilyResult r = calc().compute(Family::DB, 4);
    auto has = [&](const std::string& m) {
        return std::find(r.methods.begin(), r.methods.end(), m) != r.methods.end();
    };
    CHECK(has("enum-excb"));
    CHECK(has("enum-iexcb"));
    CHECK(has("alt-sum"));
    CHECK(has("main-formula"));
    CHECK(has("egf"));
    CHECK(has("fplus-fminus"));

    // enumeration drops out beyond the guard
    FamilyResult large = calc().compute(Family::DB, 9);
    CHECK_FALSE(std::any_of(large.methods.begin(), large.methods.end(),
                            [](const std::string& m) { return m.rfind("enum", 0) == 0; }));
}

TEST_CASE("formula-only agreement reaches n = 12") {
    FamilyCalculator::Options o;
    o.enum_max_a = 0;
    o.enum_max_b = 0;
    FamilyCalculator formula_only(o);
    for (Family f : {Family::A, Family::B, Family::BPlus, Family::BMinus, Family::DA, Family::DB,
                     Family::FPlus, Family::FMinus})
        CHECK_NOTHROW(formula_only.compute(f, 12));
    // inclusion-exclusion over positive fixed points:
    // sum (-1)^k C(12,k) 2^(12-k) (12-k)!
    CHECK(formula_only.value(Family::DB, 12).sum_of_coeffs() == Int("1190007424825"));
}

TEST_CASE("disagreement raises a verification error with both values") {
    try {
        symmetric_decompose(IntPoly{1, 0, 0, 0, 0, 1}, 2);
        CHECK(false);
    } catch (const std::invalid_argument&) {
    }
    // a calculator fed impossible options cannot disagree silently; the
    // error type carries the method payload
    std::vector<MethodValue> mv{{"left", IntPoly{1}}, {"right", IntPoly{2}}};
    VerificationError err("left and right differ", mv);
    CHECK(err.values().size() == 2);
    CHECK(err.values()[0].method == "left");
}
