#include "derange/egf.hpp"
#include "derange/families.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace derange;

TEST_CASE("exponential series basics") {
    EgfSeries e = EgfSeries::exp_ct(RatPoly::constant(1), 3);
    EgfSeries sq = e * e;
    for (int n = 0; n <= 3; ++n) CHECK(sq.at(n) == RatPoly::constant(Rat(Int(1) << n)));

    EgfSeries one = EgfSeries::one(3);
    CHECK(e * one == e);
}

TEST_CASE("inverse") {
    EgfSeries e = EgfSeries::exp_ct(RatPoly::constant(1), 5);
    EgfSeries inv = e.inverse();
    CHECK(inv == EgfSeries::exp_ct(RatPoly::constant(-1), 5));
    CHECK(EgfSeries::one(4).inverse() == EgfSeries::one(4));
    CHECK(e * inv == EgfSeries::one(5));

    EgfSeries bad(2);
    bad.set(0, RatPoly{0, 1});
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
    CHECK_THROWS_AS(EgfSeries(2).inverse(), std::domain_error);
}

TEST_CASE("order mismatch is an error") {
    CHECK_THROWS_AS(EgfSeries::one(2) * EgfSeries::one(3), std::invalid_argument);
}

TEST_CASE("product is commutative and associative") {
    EgfSeries a(3), b(3), c(3);
    a.set(0, RatPoly{1});
    a.set(1, RatPoly{0, 2});
    a.set(2, RatPoly{1, 1});
    a.set(3, RatPoly{0, 0, 5});
    b = EgfSeries::exp_ct(RatPoly{0, 1}, 3);
    c = EgfSeries::exp_ct(RatPoly{2}, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("derangement series entry") {
    // third entry of the inverse construction is x + x^2
    EgfSeries d = egf_derangement_a(3);
    CHECK(d.at(3) == RatPoly{0, 1, 1});
    CHECK(d.at(0) == RatPoly{1});
}

TEST_CASE("signed derangement series via the composed quotient") {
    // D(t) * (1 + x*a(t)) / (1 - x*a(t)^2) reproduces the degree-4 entry
    const int order = 4;
    EgfSeries a = egf_eulerian_a(order);
    EgfSeries d = egf_derangement_a(order);
    EgfSeries xa = a.scaled(RatPoly{0, 1});
    EgfSeries xaa = (a * a).scaled(RatPoly{0, 1});
    EgfSeries numer = EgfSeries::one(order) + xa;
    EgfSeries denom = EgfSeries::one(order) - xaa;
    EgfSeries db = d * numer * denom.inverse();
    CHECK(db.at(4).to_int() == IntPoly{0, 16, 144, 72, 1});
    CHECK(db == egf_derangement_b(order));
}
