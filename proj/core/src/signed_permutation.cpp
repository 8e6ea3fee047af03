#include "derange/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace derange {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size(), false);
    for (int v : entries_) {
        int a = std::abs(v);
        if (a < 1 || a > size() || seen[a - 1])
            throw std::invalid_argument("SignedPermutation: entries must have absolute values 1..n, each once");
        seen[a - 1] = true;
    }
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("SignedPermutation: bad entry '" + item + "'");
        entries.push_back(v);
    }
    return SignedPermutation(std::move(entries));
}

std::vector<int> SignedPermutation::ground() const {
    std::vector<int> g(entries_.size());
    for (int v : entries_) g[std::abs(v) - 1] = v;
    return g;
}

int SignedPermutation::apply(int a) const {
    int i = std::abs(a) - 1;
    if (i < 0 || i >= size()) throw std::invalid_argument("SignedPermutation: element outside ground set");
    std::vector<int> g = ground();
    if (g[i] != a) throw std::invalid_argument("SignedPermutation: element outside ground set");
    return entries_[i];
}

int SignedPermutation::min_ground() const {
    if (size() == 0) throw std::logic_error("min_ground on the empty signed permutation");
    std::vector<int> g = ground();
    return *std::min_element(g.begin(), g.end());
}

int SignedPermutation::des_b() const {
    int c = 0, prev = 0;
    for (int v : entries_) {
        if (prev > v) ++c;
        prev = v;
    }
    return c;
}

int SignedPermutation::asc_b() const {
    int c = 0, prev = 0;
    for (int v : entries_) {
        if (prev < v) ++c;
        prev = v;
    }
    return c;
}

std::vector<int> SignedPermutation::des_b_set() const {
    std::vector<int> s;
    int prev = 0;
    for (int i = 0; i < size(); ++i) {
        if (prev > entries_[i]) s.push_back(i);
        prev = entries_[i];
    }
    return s;
}

int SignedPermutation::exc_b() const {
    int c = 0;
    std::vector<int> g = ground();
    for (int i = 0; i < size(); ++i) {
        if (entries_[i] > g[i]) ++c;
        else if (g[i] < 0 && entries_[i] == g[i]) ++c;
    }
    return c;
}

int SignedPermutation::iexc_b() const {
    int c = 0;
    std::vector<int> g = ground();
    for (int i = 0; i < size(); ++i) {
        if (entries_[i] < g[i]) ++c;
        else if (g[i] < 0 && entries_[i] == g[i]) ++c;
    }
    return c;
}

bool SignedPermutation::is_derangement_b() const {
    std::vector<int> g = ground();
    for (int i = 0; i < size(); ++i)
        if (g[i] > 0 && entries_[i] == g[i]) return false;
    return true;
}

SignedPermutation::Half SignedPermutation::classify() const {
    if (size() == 0) throw std::invalid_argument("classify: undefined for n = 0");
    return entries_.back() > 0 ? Half::Plus : Half::Minus;
}

bool SignedPermutation::in_b_star() const {
    if (size() == 0) throw std::invalid_argument("in_b_star: undefined for n = 0");
    return apply(min_ground()) > 0;
}

SignedPermutation SignedPermutation::negated() const {
    std::vector<int> neg(entries_.size());
    for (int i = 0; i < size(); ++i) neg[i] = -entries_[i];
    return SignedPermutation(std::move(neg));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> g = ground();
    std::vector<int> inv(entries_.size());
    for (int i = 0; i < size(); ++i) inv[std::abs(entries_[i]) - 1] = g[i];
    return SignedPermutation(std::move(inv));
}

std::vector<std::vector<int>> SignedPermutation::cycles_type_b() const {
    std::vector<int> g = ground();
    std::vector<bool> seen(entries_.size(), false);
    // pairs (smallest element, cycle); collected smallest-first per cycle
    std::vector<std::vector<int>> cycles;
    for (int v : entries_) {
        int start = std::abs(v) - 1;
        if (seen[start]) continue;
        // locate the smallest ground element of this cycle
        int pos = start, min_pos = start;
        do {
            if (g[pos] < g[min_pos]) min_pos = pos;
            pos = std::abs(entries_[pos]) - 1;
        } while (pos != start);
        std::vector<int> cycle;
        pos = min_pos;
        do {
            seen[pos] = true;
            cycle.push_back(g[pos]);
            pos = std::abs(entries_[pos]) - 1;
        } while (pos != min_pos);
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() > b.front(); });
    return cycles;
}

std::vector<std::vector<int>> SignedPermutation::cycles_type_a() const {
    std::vector<int> g = ground();
    std::vector<bool> seen(entries_.size(), false);
    std::vector<std::vector<int>> cycles;
    for (int v : entries_) {
        int start = std::abs(v) - 1;
        if (seen[start]) continue;
        int pos = start, max_pos = start;
        do {
            if (g[pos] > g[max_pos]) max_pos = pos;
            pos = std::abs(entries_[pos]) - 1;
        } while (pos != start);
        std::vector<int> cycle;
        pos = max_pos;
        do {
            seen[pos] = true;
            cycle.push_back(g[pos]);
            pos = std::abs(entries_[pos]) - 1;
        } while (pos != max_pos);
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << entries_[i];
    return os.str();
}

void for_each_bn_range(int n, std::uint32_t mask_begin, std::uint32_t mask_end,
                       const std::function<void(const SignedPermutation&)>& fn) {
    if (n < 0 || n > 31) throw std::invalid_argument("for_each_bn_range: n out of range");
    for (std::uint32_t mask = mask_begin; mask < mask_end; ++mask) {
        std::vector<int> values;
        values.reserve(n);
        for (int i = 1; i <= n; ++i) values.push_back(mask >> (i - 1) & 1 ? -i : i);
        std::sort(values.begin(), values.end());
        do {
            fn(SignedPermutation(values));
        } while (std::next_permutation(values.begin(), values.end()));
    }
}

void for_each_bn(int n, const std::function<void(const SignedPermutation&)>& fn, bool allow_large) {
    if (n < 0) throw std::invalid_argument("for_each_bn: negative n");
    if (n > 10 && !allow_large)
        throw std::invalid_argument("for_each_bn: n > 10 needs the allow-large override");
    for_each_bn_range(n, 0, std::uint32_t{1} << n, fn);
}

std::vector<SignedPermutation> enumerate_bn(int n, bool allow_large) {
    std::vector<SignedPermutation> out;
    for_each_bn(n, [&](const SignedPermutation& w) { out.push_back(w); }, allow_large);
    return out;
}

}  // namespace derange
