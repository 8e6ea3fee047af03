#include "derange/bijection.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace derange;

TEST_CASE("block decomposition of the nine-element example") {
    SignedPermutation w = SignedPermutation::parse("4,-5,7,1,9,-8,3,-6,-2");
    PermutationSeq seq = phi(w);
    CHECK(seq.sigma0.ground() == std::vector<int>{1, 3, 4, 7});
    CHECK(seq.sigma0.values() == std::vector<int>{4, 7, 1, 3});
    REQUIRE(seq.blocks.size() == 3);
    CHECK(seq.blocks[0].values() == std::vector<int>{5});
    CHECK(seq.blocks[1].values() == std::vector<int>{9});
    CHECK(seq.blocks[2].values() == std::vector<int>{2, 8, 6});
    CHECK(phi_inverse(seq) == w);
    CHECK(statistic_identity_check(w));

    PhiLedger ledger = phi_ledger(w);
    CHECK(ledger.iexc_b == 5);
    CHECK(ledger.iexc_sigma0 == 2);
    CHECK(ledger.floor_term == 2);
}

TEST_CASE("single negative fixed point") {
    SignedPermutation w(std::vector<int>{-1});
    PermutationSeq seq = phi(w);
    CHECK(seq.sigma0.size() == 0);
    REQUIRE(seq.blocks.size() == 1);
    CHECK(seq.blocks[0].values() == std::vector<int>{1});
    CHECK(phi_inverse(seq) == w);

    PhiLedger ledger = phi_ledger(w);
    CHECK(ledger.iexc_b == 1);
    CHECK(ledger.iexc_sigma0 == 0);
    CHECK(ledger.floor_term == 1);
    CHECK(ledger.holds);
}

TEST_CASE("positive fixed point is rejected") {
    CHECK_THROWS_AS(phi(SignedPermutation::parse("1,2")), std::invalid_argument);
}

TEST_CASE("malformed block sequences are rejected") {
    // sigma0 with a fixed point
    PermutationSeq bad1;
    bad1.sigma0 = Permutation::identity({1});
    CHECK_THROWS_AS(phi_inverse(bad1), std::invalid_argument);
    // overlapping blocks
    PermutationSeq bad2;
    bad2.blocks = {Permutation::from_word({1}), Permutation::from_word({1})};
    CHECK_THROWS_AS(phi_inverse(bad2), std::invalid_argument);
    // gap in the ground set
    PermutationSeq bad3;
    bad3.blocks = {Permutation::from_word({2})};
    CHECK_THROWS_AS(phi_inverse(bad3), std::invalid_argument);
}

TEST_CASE("round trip, identity and parity over small ranks") {
    for (int n = 0; n <= 5; ++n) {
        std::set<PermutationSeq> images;
        long count = 0;
        for_each_bn(n, [&](const SignedPermutation& w) {
            if (!w.is_derangement_b()) return;
            ++count;
            PermutationSeq seq = phi(w);
            images.insert(seq);
            CHECK(phi_inverse(seq) == w);
            CHECK(statistic_identity_check(w));
            if (n >= 1) {
                bool even = seq.blocks.size() % 2 == 0;
                CHECK(even == (w.inverse().apply(w.min_ground()) > 0));
                CHECK(even == (w.cycles_type_b().back().back() > 0));
            }
        });
        CHECK(Int(count) == cn_cardinality(n));
        CHECK(Int(images.size()) == cn_cardinality(n));
    }
}

TEST_CASE("image is exactly the set of block sequences") {
    for (int n = 0; n <= 4; ++n) {
        std::set<PermutationSeq> images;
        for_each_bn(n, [&](const SignedPermutation& w) {
            if (w.is_derangement_b()) images.insert(phi(w));
        });
        auto cn = enumerate_cn(n);
        CHECK(cn.size() == images.size());
        CHECK(std::equal(cn.begin(), cn.end(), images.begin(), images.end()));
    }
}

TEST_CASE("block sequence counting formula matches enumeration") {
    for (int n = 0; n <= 5; ++n) CHECK(cn_cardinality(n) == Int(enumerate_cn(n).size()));
    CHECK(cn_cardinality(6) == 27949);
}
