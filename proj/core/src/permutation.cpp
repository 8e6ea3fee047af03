#include "derange/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace derange {

Permutation::Permutation(std::vector<int> ground, std::vector<int> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
    if (ground_.size() != values_.size())
        throw std::invalid_argument("Permutation: ground and value lengths differ");
    std::vector<int> sorted_values = values_;
    std::sort(sorted_values.begin(), sorted_values.end());
    std::vector<int> sorted_ground = ground_;
    std::sort(sorted_ground.begin(), sorted_ground.end());
    if (sorted_values != sorted_ground)
        throw std::invalid_argument("Permutation: values are not a rearrangement of the ground set");
    if (std::adjacent_find(sorted_ground.begin(), sorted_ground.end()) != sorted_ground.end())
        throw std::invalid_argument("Permutation: repeated ground element");
}

Permutation Permutation::identity(std::vector<int> ground) {
    std::vector<int> values = ground;
    return Permutation(std::move(ground), std::move(values));
}

Permutation Permutation::from_word(std::vector<int> word) {
    std::vector<int> ground = word;
    std::sort(ground.begin(), ground.end());
    return Permutation(std::move(ground), std::move(word));
}

int Permutation::index_of(int a) const {
    for (int i = 0; i < size(); ++i)
        if (ground_[i] == a) return i;
    throw std::invalid_argument("Permutation: element not in ground set");
}

int Permutation::apply(int a) const { return values_[index_of(a)]; }

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[index_of(values_[i])] = ground_[i];
    return Permutation(ground_, std::move(inv));
}

bool Permutation::is_derangement() const {
    for (int i = 0; i < size(); ++i)
        if (values_[i] == ground_[i]) return false;
    return true;
}

int Permutation::exc() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        if (index_of(values_[i]) > i) ++c;
    return c;
}

int Permutation::iexc() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        if (index_of(values_[i]) < i) ++c;
    return c;
}

int Permutation::des() const {
    int c = 0;
    for (int i = 0; i + 1 < size(); ++i)
        if (index_of(values_[i]) > index_of(values_[i + 1])) ++c;
    return c;
}

int Permutation::asc() const {
    int c = 0;
    for (int i = 0; i + 1 < size(); ++i)
        if (index_of(values_[i]) < index_of(values_[i + 1])) ++c;
    return c;
}

std::vector<std::vector<int>> Permutation::cycles_standard() const {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(ground_.size(), false);
    // walk positions from the largest ground element downwards so that each
    // cycle is found at its largest element first
    for (int i = size() - 1; i >= 0; --i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            cycle.push_back(ground_[j]);
            j = index_of(values_[j]);
        }
        cycles.push_back(std::move(cycle));
    }
    std::reverse(cycles.begin(), cycles.end());  // increasing largest element
    return cycles;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << values_[i];
    os << "]";
    return os.str();
}

void for_each_sn(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0 || n > 12) throw std::invalid_argument("for_each_sn: n out of the supported range [0,12]");
    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<int> values = ground;
    do {
        fn(Permutation(ground, values));
    } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<Permutation> enumerate_sn(int n) {
    std::vector<Permutation> out;
    for_each_sn(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace derange
