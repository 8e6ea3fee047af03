#include "derange/intpoly.hpp"
#include "derange/ratpoly.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace derange;

TEST_CASE("addition and normalization") {
    CHECK(IntPoly{0, 3} + IntPoly{0, 1, 1} == IntPoly{0, 4, 1});
    IntPoly p{2, 0, 5};
    CHECK(p + IntPoly{} == p);
    CHECK((IntPoly{0, 1} - IntPoly{0, 1}).is_zero());
    CHECK((IntPoly{0, 1} - IntPoly{0, 1}).coeffs().empty());
}

TEST_CASE("degree of zero is an error") {
    CHECK_THROWS_AS((IntPoly{}.degree()), std::logic_error);
    CHECK(IntPoly{7}.degree() == 0);
}

TEST_CASE("multiplication") {
    CHECK(IntPoly{1, 1} * IntPoly{1, 4, 1} == IntPoly{1, 5, 5, 1});
    IntPoly p{3, -1, 2};
    CHECK(p * IntPoly{1} == p);
    CHECK((p * IntPoly{}).is_zero());
}

TEST_CASE("multiplication matches an independent convolution and evaluation") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coeff(-9, 9), len(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> a(len(rng)), b(len(rng));
        for (auto& c : a) c = coeff(rng);
        for (auto& c : b) c = coeff(rng);
        IntPoly p{std::vector<Int>(a)}, q{std::vector<Int>(b)};
        IntPoly r = p * q;
        // independent convolution
        std::vector<Int> conv(a.size() + b.size() + 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
        CHECK(r == IntPoly(std::move(conv)));
        // evaluation homomorphism at a few points
        for (int x : {-3, 1, 5}) CHECK(r.eval(x) == p.eval(x) * q.eval(x));
    }
}

TEST_CASE("reverse") {
    CHECK(IntPoly{1, 3}.reversed(2) == IntPoly{0, 3, 1});
    CHECK(IntPoly{}.reversed(5).is_zero());
    CHECK(IntPoly{0, 1, 13, 1}.reversed(4) == IntPoly{0, 1, 13, 1});
    CHECK_THROWS_AS((IntPoly{1, 1, 1}.reversed(1)), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> a(1 + trial % 5);
        for (auto& c : a) c = coeff(rng);
        IntPoly p{std::vector<Int>(a)};
        int m = (p.is_zero() ? 0 : p.degree()) + trial % 3;
        CHECK(p.reversed(m).reversed(m) == p);
    }
}

TEST_CASE("index dilation operator") {
    IntPoly big = pow(IntPoly{1, 1}, 3) * IntPoly{1, 4, 1};
    CHECK(er_operator(big, 2) == IntPoly{1, 16, 7});
    IntPoly p{5, -2, 0, 9};
    CHECK(er_operator(p, 1) == p);
    CHECK(er_operator(IntPoly{1, 5, 9}, 2) == IntPoly{1, 9});
    CHECK_THROWS_AS(er_operator(p, 0), std::invalid_argument);

    // linearity
    IntPoly q{0, 1, 2, 3, 4};
    for (int r : {2, 3})
        CHECK(er_operator(p + q, r) == er_operator(p, r) + er_operator(q, r));
}

TEST_CASE("series division by (1-x)^n") {
    CHECK(series_div_one_minus_x_pow(IntPoly{1, 3}, 2, 2) == IntPoly{1, 5, 9});
    CHECK(series_div_one_minus_x_pow(IntPoly{1}, 1, 3) == IntPoly{1, 1, 1, 1});
    // third power sums (2i+1)^3 - (2i)^3 at i = 0, 1, 2
    CHECK(series_div_one_minus_x_pow(IntPoly{1, 16, 7}, 3, 2) == IntPoly{1, 19, 61});
    // n = 0 truncates
    CHECK(series_div_one_minus_x_pow(IntPoly{1, 2, 3, 4}, 0, 2) == IntPoly{1, 2, 3});

    // oracle: multiply by the binomial series directly
    IntPoly p{2, -1, 4};
    const int order = 7, n = 3;
    std::vector<Int> expect(order + 1, Int(0));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; j <= i; ++j) expect[i] += p.coeff(j) * binomial(n - 1 + i - j, i - j);
    CHECK(series_div_one_minus_x_pow(p, n, order) == IntPoly(std::move(expect)));
}

TEST_CASE("rational polynomial division") {
    RatPoly p{1, 0, -1};  // (1-x)(1+x)
    CHECK(p.div_exact(RatPoly{1, -1}) == RatPoly{1, 1});
    CHECK_THROWS_AS((RatPoly{1, 1}.div_exact(RatPoly{0, 1})), std::domain_error);
    auto [q, r] = RatPoly{1, 2, 3}.divmod(RatPoly{1, 1});
    CHECK(q * RatPoly{1, 1} + r == RatPoly{1, 2, 3});
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 7) == 0);
    std::vector<int> parts{2, 1, 1};
    CHECK(multinomial(4, parts) == 12);
}
