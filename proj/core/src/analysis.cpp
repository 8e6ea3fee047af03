#include "derange/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace derange {

IntPoly GammaVector::reconstruct() const {
    IntPoly acc;
    const IntPoly one_plus_x{1, 1};
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (gammas[i] == 0) continue;
        acc += gammas[i] * (IntPoly::monomial(1, i) * pow(one_plus_x, n - 2 * static_cast<int>(i)));
    }
    return acc;
}

bool GammaVector::nonnegative() const {
    return std::all_of(gammas.begin(), gammas.end(), [](const Int& g) { return g >= 0; });
}

bool is_symmetric(const IntPoly& p, int n) {
    if (p.is_zero()) return true;
    if (n < p.degree()) return false;
    return p.reversed(n) == p;
}

std::pair<bool, std::vector<int>> unimodal_peaks(const IntPoly& p) {
    if (p.is_zero()) return {true, {0}};
    const auto c = p.coeffs();
    int d = p.degree();
    // prefix_ok[j]: nondecreasing on 0..j; suffix_ok[j]: nonincreasing on j..d
    std::vector<bool> prefix_ok(d + 1), suffix_ok(d + 1);
    prefix_ok[0] = true;
    for (int i = 1; i <= d; ++i) prefix_ok[i] = prefix_ok[i - 1] && c[i - 1] <= c[i];
    suffix_ok[d] = true;
    for (int i = d - 1; i >= 0; --i) suffix_ok[i] = suffix_ok[i + 1] && c[i] >= c[i + 1];
    std::vector<int> peaks;
    for (int j = 0; j <= d; ++j)
        if (prefix_ok[j] && suffix_ok[j]) peaks.push_back(j);
    return {!peaks.empty(), peaks};
}

bool is_log_concave(const IntPoly& p) {
    if (p.is_zero()) return true;
    const auto c = p.coeffs();
    for (std::size_t i = 1; i + 1 < c.size(); ++i)
        if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
    return true;
}

bool has_internal_zeros(const IntPoly& p) {
    if (p.is_zero()) return false;
    const auto c = p.coeffs();
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    bool gap = false;
    for (std::size_t i = first; i < c.size(); ++i) {
        if (c[i] == 0) gap = true;
        else if (gap) return true;  // a nonzero after a zero after a nonzero
    }
    return false;
}

GammaVector gamma_extract(const IntPoly& p, int n) {
    if (!is_symmetric(p, n))
        throw std::invalid_argument("gamma_extract: polynomial is not symmetric about n/2");
    GammaVector g;
    g.n = n;
    g.gammas.assign(n / 2 + 1, Int(0));
    IntPoly rem = p;
    const IntPoly one_plus_x{1, 1};
    for (int i = 0; i <= n / 2; ++i) {
        Int gi = rem.coeff(i);
        g.gammas[i] = gi;
        if (gi != 0) rem -= gi * (IntPoly::monomial(1, i) * pow(one_plus_x, n - 2 * i));
    }
    if (!rem.is_zero()) throw std::invalid_argument("gamma_extract: nonzero remainder");
    return g;
}

namespace {

int sign_of(const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

// signs of the chain at +inf and -inf come from leading coefficients
int sign_changes_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
    int changes = 0, last = 0;
    for (const RatPoly& q : chain) {
        if (q.is_zero()) continue;
        int s = sign_of(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (last != 0 && s != 0 && s != last) ++changes;
        if (s != 0) last = s;
    }
    return changes;
}

}  // namespace

int sturm_distinct_real_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_distinct_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    std::vector<RatPoly> chain = {p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return sign_changes_at_infinity(chain, false) - sign_changes_at_infinity(chain, true);
}

bool sturm_real_rooted(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_rooted: zero polynomial");
    if (p.degree() == 0) return true;
    RatPoly q = RatPoly::from_int(p);
    // strip multiplicities: distinct roots of p are the roots of p / gcd(p, p')
    RatPoly squarefree = q.div_exact(gcd(q, q.derivative()));
    return sturm_distinct_real_roots(squarefree) == squarefree.degree();
}

namespace {

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t k = m.size();
    Int denom = 1;
    int sign = 1;
    for (std::size_t col = 0; col + 1 < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t row = col + 1; row < k; ++row) {
            for (std::size_t j = col + 1; j < k; ++j)
                m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / denom;
            m[row][col] = 0;
        }
        denom = m[col][col];
    }
    return sign * m[k - 1][k - 1];
}

// visits k-subsets of 0..limit-1
bool for_each_subset(int limit, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == limit - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool toeplitz_minor_check(const IntPoly& p, int order) {
    if (order < 1 || order > 6) throw std::invalid_argument("toeplitz_minor_check: order must be in [1,6]");
    if (p.is_zero()) return true;
    for (const Int& c : p.coeffs())
        if (c < 0) throw std::invalid_argument("toeplitz_minor_check: negative coefficient");
    const int window = p.degree() + order + 1;
    auto entry = [&](int i, int j) -> Int {
        int k = i - j;
        return k < 0 ? Int(0) : p.coeff(k);
    };
    for (int k = 1; k <= order; ++k) {
        bool ok = for_each_subset(window, k, [&](const std::vector<int>& rows) {
            return for_each_subset(window, k, [&](const std::vector<int>& cols) {
                // lower triangular: a minor with rows entirely above the
                // columns is identically zero, skip the work
                if (rows.back() < cols.front()) return true;
                std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) m[i][j] = entry(rows[i], cols[j]);
                return det_bareiss(std::move(m)) >= 0;
            });
        });
        if (!ok) return false;
    }
    return true;
}

ShapeReport shape_report(const IntPoly& p) {
    ShapeReport r;
    if (p.is_zero()) {
        r.zero_polynomial = true;
        r.symmetric = true;  // flagged: the center is undefined
        auto [uni, peaks] = unimodal_peaks(p);
        r.unimodal = uni;
        r.peaks = peaks;
        r.log_concave = true;
        return r;
    }
    // detect symmetry from the window between the lowest and highest
    // nonzero coefficients
    int low = 0;
    while (p.coeff(low) == 0) ++low;
    int high = p.degree();
    bool palindrome = true;
    for (int i = low, j = high; i < j; ++i, --j)
        if (p.coeff(i) != p.coeff(j)) palindrome = false;
    r.symmetric = palindrome;
    if (palindrome) {
        r.center_times_two = low + high;
        r.gamma_nonnegative = gamma_extract(p, low + high).nonnegative();
    }
    auto [uni, peaks] = unimodal_peaks(p);
    r.unimodal = uni;
    r.peaks = std::move(peaks);
    r.log_concave = is_log_concave(p);
    r.internal_zeros = has_internal_zeros(p);
    r.real_rooted = sturm_real_rooted(p);
    bool nonneg = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Int& c) { return c >= 0; });
    if (*r.real_rooted && nonneg) {
        assert(r.log_concave && r.unimodal && !r.internal_zeros);
    }
    return r;
}

}  // namespace derange
