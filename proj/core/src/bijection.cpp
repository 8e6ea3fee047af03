#include "derange/bijection.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace derange {

int PermutationSeq::n() const {
    int total = sigma0.size();
    for (const Permutation& b : blocks) total += b.size();
    return total;
}

std::string PermutationSeq::str() const {
    std::ostringstream os;
    os << "(" << sigma0.str();
    for (const Permutation& b : blocks) os << "; " << b.str();
    os << ")";
    return os.str();
}

PermutationSeq phi(const SignedPermutation& w) {
    if (!w.is_derangement_b())
        throw std::invalid_argument("phi: input has a positive fixed point");

    auto cycles = w.cycles_type_b();

    // leading cycles are exactly those whose smallest element is positive
    std::size_t j = 0;
    while (j < cycles.size() && cycles[j].front() > 0) ++j;

    std::map<int, int> sigma0_map;
    for (std::size_t c = 0; c < j; ++c) {
        const auto& cyc = cycles[c];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            sigma0_map[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    std::vector<int> ground, values;
    for (auto& [a, v] : sigma0_map) {
        ground.push_back(a);
        values.push_back(v);
    }
    Permutation sigma0(std::move(ground), std::move(values));

    std::vector<int> word;
    for (std::size_t c = j; c < cycles.size(); ++c)
        word.insert(word.end(), cycles[c].begin(), cycles[c].end());

    // maximal constant-sign runs; the first is negative and signs alternate
    std::vector<Permutation> blocks;
    std::size_t start = 0;
    while (start < word.size()) {
        bool neg = word[start] < 0;
        std::size_t end = start;
        while (end < word.size() && (word[end] < 0) == neg) ++end;
        std::vector<int> abs_word;
        for (std::size_t i = start; i < end; ++i) abs_word.push_back(std::abs(word[i]));
        blocks.push_back(Permutation::from_word(std::move(abs_word)));
        start = end;
    }
    return PermutationSeq{std::move(sigma0), std::move(blocks)};
}

SignedPermutation phi_inverse(const PermutationSeq& c) {
    if (!c.sigma0.is_derangement())
        throw std::invalid_argument("phi_inverse: sigma_0 has a fixed point");

    int n = c.n();
    std::vector<bool> used(n, false);
    auto mark = [&](int a) {
        if (a < 1 || a > n || used[a - 1])
            throw std::invalid_argument("phi_inverse: blocks do not partition [n]");
        used[a - 1] = true;
    };
    for (int a : c.sigma0.ground()) mark(a);
    for (const Permutation& b : c.blocks) {
        if (b.size() == 0) throw std::invalid_argument("phi_inverse: empty block");
        for (int a : b.ground()) mark(a);
    }

    // rebuild the word, signs alternating per block, negatives on odd blocks
    std::vector<int> word;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        bool neg = i % 2 == 0;
        for (int v : c.blocks[i].values()) word.push_back(neg ? -v : v);
    }

    std::vector<int> entries(n, 0);
    auto link = [&](int from, int to) { entries[std::abs(from) - 1] = to; };

    for (int a : c.sigma0.ground()) link(a, c.sigma0.apply(a));

    // a word position starts a new cycle exactly when it drops below every
    // earlier word element, so split at strict prefix minima
    std::size_t start = 0;
    int prefix_min = word.empty() ? 0 : word[0];
    for (std::size_t i = 0; i < word.size(); ++i) {
        prefix_min = std::min(prefix_min, word[i]);
        bool closes = i + 1 == word.size() || word[i + 1] < prefix_min;
        if (closes) {
            for (std::size_t t = start; t <= i; ++t)
                link(word[t], word[t + 1 <= i ? t + 1 : start]);
            start = i + 1;
        }
    }

    return SignedPermutation(std::move(entries));
}

PhiLedger phi_ledger(const SignedPermutation& w) {
    PermutationSeq seq = phi(w);
    PhiLedger ledger;
    ledger.iexc_b = w.iexc_b();
    ledger.iexc_sigma0 = seq.sigma0.iexc();
    int k = static_cast<int>(seq.blocks.size());
    int sum = 0;
    for (int i = 1; i <= k; ++i) {
        const Permutation& b = seq.blocks[i - 1];
        int v = i % 2 == 1 ? b.asc() : b.des();
        ledger.block_stats.emplace_back(i % 2 == 1 ? "asc" : "des", v);
        sum += v;
    }
    ledger.floor_term = (k + 1) / 2;
    ledger.holds = ledger.iexc_b == ledger.iexc_sigma0 + sum + ledger.floor_term;
    return ledger;
}

bool statistic_identity_check(const SignedPermutation& w) { return phi_ledger(w).holds; }

namespace {

void subsets_of(const std::vector<int>& pool, std::size_t from, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& fn) {
    if (from == pool.size()) {
        fn(cur);
        return;
    }
    subsets_of(pool, from + 1, cur, fn);
    cur.push_back(pool[from]);
    subsets_of(pool, from + 1, cur, fn);
    cur.pop_back();
}

// all ordered partitions of rest into nonempty blocks
void ordered_partitions(const std::vector<int>& rest,
                        std::vector<std::vector<int>>& acc,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    if (rest.empty()) {
        fn(acc);
        return;
    }
    std::vector<int> cur;
    subsets_of(rest, 0, cur, [&](const std::vector<int>& block_raw) {
        if (block_raw.empty()) return;
        std::vector<int> block = block_raw;
        std::sort(block.begin(), block.end());
        std::vector<int> remaining;
        for (int a : rest)
            if (std::find(block.begin(), block.end(), a) == block.end()) remaining.push_back(a);
        acc.push_back(std::move(block));
        ordered_partitions(remaining, acc, fn);
        acc.pop_back();
    });
}

}  // namespace

std::vector<PermutationSeq> enumerate_cn(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("enumerate_cn: n out of the supported range [0,7]");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);

    std::vector<PermutationSeq> out;
    std::vector<int> cur;
    subsets_of(all, 0, cur, [&](const std::vector<int>& s0_raw) {
        std::vector<int> s0 = s0_raw;
        std::sort(s0.begin(), s0.end());
        std::vector<int> rest;
        for (int a : all)
            if (std::find(s0.begin(), s0.end(), a) == s0.end()) rest.push_back(a);

        std::vector<Permutation> derangements;
        if (s0.empty()) {
            derangements.push_back(Permutation{});
        } else {
            std::vector<int> vals = s0;
            do {
                Permutation p(s0, vals);
                if (p.is_derangement()) derangements.push_back(std::move(p));
            } while (std::next_permutation(vals.begin(), vals.end()));
        }
        if (derangements.empty()) return;

        std::vector<std::vector<int>> acc;
        ordered_partitions(rest, acc, [&](const std::vector<std::vector<int>>& partition) {
            // every block ranges independently over all words on its set
            std::vector<std::vector<Permutation>> block_choices;
            for (const auto& block : partition) {
                std::vector<Permutation> words;
                std::vector<int> w = block;
                do {
                    words.push_back(Permutation(block, w));
                } while (std::next_permutation(w.begin(), w.end()));
                block_choices.push_back(std::move(words));
            }
            std::vector<std::size_t> idx(block_choices.size(), 0);
            while (true) {
                PermutationSeq seq;
                for (const Permutation& d : derangements) {
                    seq.sigma0 = d;
                    seq.blocks.clear();
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        seq.blocks.push_back(block_choices[i][idx[i]]);
                    out.push_back(seq);
                }
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == block_choices[i].size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

Int cn_cardinality(int n) {
    if (n < 0) throw std::invalid_argument("cn_cardinality: negative n");
    std::vector<Int> der(n + 1);
    der[0] = 1;
    if (n >= 1) der[1] = 0;
    for (int j = 2; j <= n; ++j) der[j] = Int(j - 1) * (der[j - 1] + der[j - 2]);
    // ordered partitions of an m-set with a word per block: m! * 2^(m-1)
    auto words = [](int m) -> Int {
        if (m == 0) return 1;
        return factorial(m) * (Int(1) << (m - 1));
    };
    Int total = 0;
    for (int r0 = 0; r0 <= n; ++r0) total += binomial(n, r0) * der[r0] * words(n - r0);
    return total;
}

}  // namespace derange
