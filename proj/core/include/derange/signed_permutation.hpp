#pragma once

#include "derange/permutation.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace derange {

/// Signed permutation of [n]: a choice of ground set S containing exactly
/// one of {i, -i} for each i, together with a bijection w of S. Serialized
/// as the single entry list (w(a_1), ..., w(a_n)), where a_i is the element
/// of S with |a_i| = i; S itself is the set of entries.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> entries);

    /// Parses comma-separated signed integers, e.g. "3,-1,2".
    static SignedPermutation parse(const std::string& text);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const noexcept { return entries_; }

    /// The ground set as (a_1, ..., a_n) ordered by absolute value.
    std::vector<int> ground() const;
    int apply(int a) const;
    /// Minimum of the ground set in the natural integer order.
    int min_ground() const;

    int des_b() const;
    int asc_b() const;
    /// Descent positions, a subset of {0, ..., n-1}; position 0 compares
    /// against the padding value w(a_0) = 0.
    std::vector<int> des_b_set() const;

    /// B-excedances: w(a) > a, plus negative fixed points.
    int exc_b() const;
    /// Inverse B-excedances: w(a) < a, plus negative fixed points.
    int iexc_b() const;

    /// True when no positive a in S has w(a) = a.
    bool is_derangement_b() const;

    enum class Half { Plus, Minus };
    /// Plus when the last entry is positive. Undefined for n = 0.
    Half classify() const;
    /// True when w(m_w) > 0 for the minimum ground element m_w.
    bool in_b_star() const;

    SignedPermutation negated() const;
    SignedPermutation inverse() const;

    /// Cycle form with every cycle starting at its smallest element (natural
    /// integer order) and cycles listed by decreasing smallest element.
    std::vector<std::vector<int>> cycles_type_b() const;
    /// Cycle form under the type A convention on the natural order: largest
    /// element first, cycles by increasing largest element.
    std::vector<std::vector<int>> cycles_type_a() const;

    std::string str() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// Calls fn for all 2^n n! signed permutations of [n]. Sign patterns form
/// the outer loop in increasing order of the bitmask whose bit i-1 marks a
/// negative sign at position i, so the all-positive pattern comes first;
/// value sequences run lexicographically inside each pattern. Guarded at
/// n <= 10 unless allow_large is set.
void for_each_bn(int n, const std::function<void(const SignedPermutation&)>& fn,
                 bool allow_large = false);

/// Same enumeration restricted to sign patterns in [mask_begin, mask_end).
void for_each_bn_range(int n, std::uint32_t mask_begin, std::uint32_t mask_end,
                       const std::function<void(const SignedPermutation&)>& fn);

std::vector<SignedPermutation> enumerate_bn(int n, bool allow_large = false);

}  // namespace derange
