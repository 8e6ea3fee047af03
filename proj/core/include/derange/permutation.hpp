#pragma once

#include <functional>
#include <string>
#include <vector>

namespace derange {

/// Permutation of a finite totally ordered set of integers. The ground
/// vector lists the set in its reference order a_1 < a_2 < ... < a_n, and
/// values holds (w(a_1), ..., w(a_n)). Statistics compare positions in the
/// ground order.
class Permutation {
public:
    Permutation() = default;
    Permutation(std::vector<int> ground, std::vector<int> values);

    static Permutation identity(std::vector<int> ground);
    /// Ground set is the sorted word; values are the word itself.
    static Permutation from_word(std::vector<int> word);

    int size() const noexcept { return static_cast<int>(ground_.size()); }
    const std::vector<int>& ground() const noexcept { return ground_; }
    const std::vector<int>& values() const noexcept { return values_; }

    int apply(int a) const;
    Permutation inverse() const;
    bool is_derangement() const;

    int exc() const;
    int iexc() const;
    int des() const;
    int asc() const;

    /// Standard cycle form: every cycle starts with its largest element
    /// (in the ground order) and cycles are listed by increasing largest
    /// element.
    std::vector<std::vector<int>> cycles_standard() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.ground_ != b.ground_ ? a.ground_ < b.ground_ : a.values_ < b.values_;
    }

    std::string str() const;

private:
    int index_of(int a) const;
    std::vector<int> ground_;
    std::vector<int> values_;
};

/// Calls fn for every permutation of [n] in lexicographic order of the
/// value sequence. Guarded at n <= 12.
void for_each_sn(int n, const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> enumerate_sn(int n);

}  // namespace derange
