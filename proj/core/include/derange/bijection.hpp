#pragma once

#include "derange/intpoly.hpp"
#include "derange/permutation.hpp"
#include "derange/signed_permutation.hpp"

#include <string>
#include <vector>

namespace derange {

/// A derangement sigma_0 of a subset S_0 of [n] followed by words
/// sigma_1, ..., sigma_k on the remaining blocks of a weak ordered
/// partition of [n]; every block past the first is nonempty.
struct PermutationSeq {
    Permutation sigma0;
    std::vector<Permutation> blocks;

    int n() const;
    std::string str() const;

    friend bool operator==(const PermutationSeq&, const PermutationSeq&) = default;
    friend bool operator<(const PermutationSeq& a, const PermutationSeq& b) {
        if (!(a.sigma0 == b.sigma0)) return a.sigma0 < b.sigma0;
        return a.blocks < b.blocks;
    }
};

/// Splits the cycle form of a type-B derangement into its all-positive
/// leading cycles (sigma_0) and the sign-alternating blocks of the
/// remaining word. Throws if w has a positive fixed point.
PermutationSeq phi(const SignedPermutation& w);

/// Reconstructs the signed permutation from a block sequence; validates the
/// partition shape and that sigma_0 is a derangement.
SignedPermutation phi_inverse(const PermutationSeq& c);

/// Per-block statistic ledger for the map phi: iexc_B(w) should equal
/// iexc(sigma_0) + sum of asc/des over the blocks + floor((k+1)/2),
/// with asc taken on odd blocks and des on even ones.
struct PhiLedger {
    int iexc_b = 0;
    int iexc_sigma0 = 0;
    std::vector<std::pair<std::string, int>> block_stats;  // ("asc"|"des", value)
    int floor_term = 0;
    bool holds = false;
};

PhiLedger phi_ledger(const SignedPermutation& w);
bool statistic_identity_check(const SignedPermutation& w);

/// Direct enumeration of all block sequences on [n], independent of phi.
std::vector<PermutationSeq> enumerate_cn(int n);

/// Closed-form count of the block sequences on [n].
Int cn_cardinality(int n);

}  // namespace derange
