#include "derange/families.hpp"

#include "derange/analysis.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

namespace derange {

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {
        Family::A,      Family::B,       Family::BPlus,  Family::BMinus,
        Family::DA,     Family::DB,      Family::FPlus,  Family::FMinus,
        Family::XiPlus, Family::XiMinus, Family::GammaA, Family::XiA};
    return fams;
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::A: return "a";
        case Family::B: return "b";
        case Family::BPlus: return "b+";
        case Family::BMinus: return "b-";
        case Family::DA: return "da";
        case Family::DB: return "db";
        case Family::FPlus: return "f+";
        case Family::FMinus: return "f-";
        case Family::XiPlus: return "xi+";
        case Family::XiMinus: return "xi-";
        case Family::GammaA: return "gamma";
        case Family::XiA: return "xi";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& tag) {
    for (Family f : all_families())
        if (family_tag(f) == tag) return f;
    if (tag == "d") return Family::DA;  // common shorthand
    return std::nullopt;
}

VerificationError::VerificationError(std::string message, std::vector<MethodValue> values)
    : std::runtime_error(std::move(message)), values_(std::move(values)) {}

namespace {

FamilyResult finalize(Family f, int n, std::vector<MethodValue> mv) {
    for (std::size_t i = 1; i < mv.size(); ++i) {
        if (mv[i].value == mv[0].value) continue;
        std::ostringstream os;
        os << "family " << family_tag(f) << " at n=" << n << ": methods disagree:";
        for (const auto& m : mv) os << " " << m.method << "=[" << m.value << "]";
        throw VerificationError(os.str(), std::move(mv));
    }
    FamilyResult r;
    r.family = f;
    r.n = n;
    r.value = mv.front().value;
    for (auto& m : mv) r.methods.push_back(std::move(m.method));
    std::sort(r.methods.begin(), r.methods.end());
    return r;
}

void bump(std::vector<Int>& acc, int k) { acc[k] += 1; }

IntPoly poly_of(std::vector<Int> acc) { return IntPoly(std::move(acc)); }

}  // namespace

// ---------------------------------------------------------------------------
// enumeration scans

const FamilyCalculator::SnStats& FamilyCalculator::sn_stats(int n) const {
    {
        std::lock_guard lock(mu_);
        auto it = sn_cache_.find(n);
        if (it != sn_cache_.end()) return it->second;
    }
    if (n < 0 || n > 12) throw std::invalid_argument("sn_stats: n out of the supported range [0,12]");
    std::vector<Int> a_des(n + 1, Int(0)), a_exc(n + 1, Int(0)), d_exc(n + 1, Int(0));
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        int des = 0, exc = 0;
        bool derangement = true;
        for (int i = 0; i < n; ++i) {
            if (i + 1 < n && v[i] > v[i + 1]) ++des;
            if (v[i] > i + 1) ++exc;
            if (v[i] == i + 1) derangement = false;
        }
        bump(a_des, des);
        bump(a_exc, exc);
        if (derangement) bump(d_exc, exc);
    } while (std::next_permutation(v.begin(), v.end()));
    SnStats stats{poly_of(std::move(a_des)), poly_of(std::move(a_exc)), poly_of(std::move(d_exc))};
    std::lock_guard lock(mu_);
    return sn_cache_.try_emplace(n, std::move(stats)).first->second;
}

namespace {

struct RawBnAcc {
    std::vector<Int> b_desb, b_ascb, b_excb, b_iexcb;
    std::vector<Int> bplus_desb, bminus_desb;
    std::vector<Int> db_excb, db_iexcb;
    std::vector<Int> fplus_excb, fminus_excb;

    explicit RawBnAcc(int n)
        : b_desb(n + 1, Int(0)), b_ascb(n + 1, Int(0)), b_excb(n + 1, Int(0)),
          b_iexcb(n + 1, Int(0)), bplus_desb(n + 1, Int(0)), bminus_desb(n + 1, Int(0)),
          db_excb(n + 1, Int(0)), db_iexcb(n + 1, Int(0)), fplus_excb(n + 1, Int(0)),
          fminus_excb(n + 1, Int(0)) {}

    void merge(const RawBnAcc& other) {
        auto add = [](std::vector<Int>& a, const std::vector<Int>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        };
        add(b_desb, other.b_desb);
        add(b_ascb, other.b_ascb);
        add(b_excb, other.b_excb);
        add(b_iexcb, other.b_iexcb);
        add(bplus_desb, other.bplus_desb);
        add(bminus_desb, other.bminus_desb);
        add(db_excb, other.db_excb);
        add(db_iexcb, other.db_iexcb);
        add(fplus_excb, other.fplus_excb);
        add(fminus_excb, other.fminus_excb);
    }
};

// one pass over the sign patterns in [lo, hi), all value orders inside
RawBnAcc scan_bn_range(int n, std::uint32_t lo, std::uint32_t hi) {
    RawBnAcc acc(n);
    std::vector<int> ground(n), values;
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
        for (int i = 1; i <= n; ++i) ground[i - 1] = mask >> (i - 1) & 1 ? -i : i;
        // position of the minimum ground element, fixed per sign pattern
        int mw_pos = 0;
        for (int i = 1; i < n; ++i)
            if (ground[i] < ground[mw_pos]) mw_pos = i;
        values = ground;
        std::sort(values.begin(), values.end());
        do {
            int desb = 0, ascb = 0, excb = 0, iexcb = 0;
            bool derangement = true;
            int prev = 0;
            for (int i = 0; i < n; ++i) {
                int v = values[i], g = ground[i];
                if (prev > v) ++desb; else if (prev < v) ++ascb;
                prev = v;
                if (v > g) ++excb;
                else if (v < g) ++iexcb;
                else {  // fixed point
                    if (g > 0) derangement = false;
                    else { ++excb; ++iexcb; }
                }
            }
            bump(acc.b_desb, desb);
            bump(acc.b_ascb, ascb);
            bump(acc.b_excb, excb);
            bump(acc.b_iexcb, iexcb);
            bool plus_half = n == 0 || values[n - 1] > 0;
            bump(plus_half ? acc.bplus_desb : acc.bminus_desb, desb);
            if (derangement) {
                bump(acc.db_excb, excb);
                bump(acc.db_iexcb, iexcb);
                bool star = n == 0 || values[mw_pos] > 0;
                bump(star ? acc.fplus_excb : acc.fminus_excb, excb);
            }
        } while (std::next_permutation(values.begin(), values.end()));
    }
    return acc;
}

}  // namespace

const FamilyCalculator::BnStats& FamilyCalculator::bn_stats(int n) const {
    {
        std::lock_guard lock(mu_);
        auto it = bn_cache_.find(n);
        if (it != bn_cache_.end()) return it->second;
    }
    if (n < 0) throw std::invalid_argument("bn_stats: negative n");
    if (n > 10 && !opt_.allow_large)
        throw std::invalid_argument("bn_stats: n > 10 needs the allow-large override");

    std::uint32_t patterns = std::uint32_t{1} << n;
    int jobs = std::max(1, opt_.jobs);
    RawBnAcc total(n);
    if (jobs == 1 || patterns < 4) {
        total = scan_bn_range(n, 0, patterns);
    } else {
        std::vector<std::future<RawBnAcc>> parts;
        std::uint32_t chunk = (patterns + jobs - 1) / jobs;
        for (std::uint32_t lo = 0; lo < patterns; lo += chunk) {
            std::uint32_t hi = std::min(patterns, lo + chunk);
            parts.push_back(std::async(std::launch::async, scan_bn_range, n, lo, hi));
        }
        for (auto& p : parts) total.merge(p.get());
    }

    BnStats stats{poly_of(std::move(total.b_desb)),     poly_of(std::move(total.b_ascb)),
                  poly_of(std::move(total.b_excb)),     poly_of(std::move(total.b_iexcb)),
                  poly_of(std::move(total.bplus_desb)), poly_of(std::move(total.bminus_desb)),
                  poly_of(std::move(total.db_excb)),    poly_of(std::move(total.db_iexcb)),
                  poly_of(std::move(total.fplus_excb)), poly_of(std::move(total.fminus_excb))};
    std::lock_guard lock(mu_);
    return bn_cache_.try_emplace(n, std::move(stats)).first->second;
}

// ---------------------------------------------------------------------------
// generating functions

namespace {

RatPoly rp_x() { return RatPoly::monomial(1, 1); }
RatPoly rp_one_minus_x() { return RatPoly{1, -1}; }

// (e^{xt} - x e^t) / (1-x)
EgfSeries tilde_den_a(int order) {
    EgfSeries s = EgfSeries::exp_ct(rp_x(), order);
    s -= EgfSeries::exp_ct(RatPoly::constant(1), order).scaled(rp_x());
    return s.div_entries_exact(rp_one_minus_x());
}

// (e^t - e^{xt}) / (1-x)
EgfSeries tilde_num_a(int order) {
    EgfSeries s = EgfSeries::exp_ct(RatPoly::constant(1), order);
    s -= EgfSeries::exp_ct(rp_x(), order);
    return s.div_entries_exact(rp_one_minus_x());
}

// (e^{2xt} - x e^{2t}) / (1-x)
EgfSeries tilde_den_b(int order) {
    EgfSeries s = EgfSeries::exp_ct(RatPoly::monomial(2, 1), order);
    s -= EgfSeries::exp_ct(RatPoly::constant(2), order).scaled(rp_x());
    return s.div_entries_exact(rp_one_minus_x());
}

IntPoly egf_entry(const EgfSeries& s, int n) { return s.at(n).to_int(); }

}  // namespace

EgfSeries egf_eulerian_a(int order) { return tilde_num_a(order) * tilde_den_a(order).inverse(); }

EgfSeries egf_derangement_a(int order) { return tilde_den_a(order).inverse(); }

EgfSeries egf_derangement_b(int order) {
    return EgfSeries::exp_ct(rp_x(), order) * tilde_den_b(order).inverse();
}

EgfSeries egf_f_plus(int order) { return tilde_den_a(order) * tilde_den_b(order).inverse(); }

EgfSeries egf_f_minus(int order) {
    return tilde_num_a(order).scaled(rp_x()) * tilde_den_b(order).inverse();
}

EgfSeries egf_b_plus(int order) {
    return EgfSeries::exp_ct(RatPoly::constant(1), order) * egf_f_plus(order);
}

EgfSeries egf_b_minus(int order) {
    return EgfSeries::exp_ct(RatPoly::constant(1), order) * egf_f_minus(order);
}

IntPoly eulerian_a_egf(int n) {
    if (n == 0) return IntPoly::constant(1);
    return egf_entry(egf_eulerian_a(n), n);
}

IntPoly derangement_a_egf(int n) { return egf_entry(egf_derangement_a(n), n); }
IntPoly derangement_b_egf(int n) { return egf_entry(egf_derangement_b(n), n); }
IntPoly f_plus_egf(int n) { return egf_entry(egf_f_plus(n), n); }
IntPoly f_minus_egf(int n) { return egf_entry(egf_f_minus(n), n); }
IntPoly b_plus_egf(int n) { return egf_entry(egf_b_plus(n), n); }
IntPoly b_minus_egf(int n) { return egf_entry(egf_b_minus(n), n); }

// ---------------------------------------------------------------------------
// formula routes

namespace {

IntPoly alternating_binomial_sum(int n, const std::function<IntPoly(int)>& term) {
    IntPoly acc;
    for (int k = 0; k <= n; ++k) {
        IntPoly t = binomial(n, k) * term(k);
        if ((n - k) % 2 == 1) t = -t;
        acc += t;
    }
    return acc;
}

}  // namespace

IntPoly derangement_a_alt_sum(int n, const FamilyCalculator& calc) {
    return alternating_binomial_sum(n, [&](int k) { return calc.value(Family::A, k); });
}

IntPoly derangement_b_alt_sum(int n, const FamilyCalculator& calc) {
    return alternating_binomial_sum(n, [&](int k) { return calc.value(Family::B, k); });
}

IntPoly f_plus_alt_sum(int n, const FamilyCalculator& calc) {
    return alternating_binomial_sum(n, [&](int k) { return calc.value(Family::BPlus, k); });
}

IntPoly f_minus_alt_sum(int n, const FamilyCalculator& calc) {
    return alternating_binomial_sum(n, [&](int k) { return calc.value(Family::BMinus, k); });
}

void for_each_composition(int n, int parity,
                          const std::function<void(int, const std::vector<int>&)>& fn) {
    std::vector<int> rest;
    std::function<void(int, int)> gen = [&](int r0, int remaining) {
        if (remaining == 0) {
            int k = static_cast<int>(rest.size());
            if (parity < 0 || k % 2 == parity) fn(r0, rest);
            return;
        }
        for (int r = 1; r <= remaining; ++r) {
            rest.push_back(r);
            gen(r0, remaining - r);
            rest.pop_back();
        }
    };
    for (int r0 = 0; r0 <= n; ++r0) gen(r0, n - r0);
}

namespace {

IntPoly composition_sum(int n, int parity, const FamilyCalculator& calc, Family head, Family tail,
                        const std::function<int(int)>& weight_exponent) {
    IntPoly acc;
    for_each_composition(n, parity, [&](int r0, const std::vector<int>& rest) {
        std::vector<int> parts;
        parts.reserve(rest.size() + 1);
        parts.push_back(r0);
        parts.insert(parts.end(), rest.begin(), rest.end());
        IntPoly term = IntPoly::monomial(multinomial(n, parts), weight_exponent(static_cast<int>(rest.size())));
        term *= calc.value(head, r0);
        for (int r : rest) {
            if (term.is_zero()) break;
            term *= calc.value(tail, r);
        }
        acc += term;
    });
    return acc;
}

}  // namespace

IntPoly main_formula(int n, const FamilyCalculator& calc) {
    return composition_sum(n, -1, calc, Family::DA, Family::A, [](int k) { return (k + 1) / 2; });
}

IntPoly f_plus_multinomial(int n, const FamilyCalculator& calc) {
    return composition_sum(n, 0, calc, Family::DA, Family::A, [](int k) { return k / 2; });
}

IntPoly f_minus_multinomial(int n, const FamilyCalculator& calc) {
    return composition_sum(n, 1, calc, Family::DA, Family::A, [](int k) { return (k + 1) / 2; });
}

IntPoly xi_plus_multinomial(int n, const FamilyCalculator& calc) {
    return composition_sum(n, 0, calc, Family::XiA, Family::GammaA, [](int k) { return k / 2; });
}

IntPoly xi_minus_multinomial(int n, const FamilyCalculator& calc) {
    return composition_sum(n, 1, calc, Family::XiA, Family::GammaA, [](int k) { return (k + 1) / 2; });
}

IntPoly f_plus_recurrence(int n, const FamilyCalculator& calc) {
    if (n == 0) return IntPoly::constant(1);
    const IntPoly x{0, 1};
    const IntPoly prev = calc.value(Family::FPlus, n - 1);
    IntPoly out = (Int(2 * (n - 1)) * x - IntPoly::constant(1)) * prev;
    out += IntPoly{0, 2, -2} * prev.derivative();  // 2x(1-x) p'
    if (n >= 2) out += Int(2 * (n - 1)) * (x * calc.value(Family::FPlus, n - 2));
    out += calc.value(Family::DB, n - 1);
    return out;
}

IntPoly b_plus_e2(int n, const FamilyCalculator& calc) {
    return er_operator(pow(IntPoly{1, 1}, n) * calc.value(Family::A, n), 2);
}

IntPoly b_plus_recurrence(int n, const FamilyCalculator& calc) {
    if (n == 0) return IntPoly::constant(1);
    const IntPoly x{0, 1};
    const IntPoly prev = calc.value(Family::BPlus, n - 1);
    IntPoly out = Int(2 * (n - 1)) * (x * prev);
    out += IntPoly{0, 2, -2} * prev.derivative();
    out += calc.value(Family::B, n - 1);
    return out;
}

IntPoly b_plus_series(int n) {
    if (n == 0) return IntPoly::constant(1);
    // series coefficients (2i+1)^n - (2i)^n through x^n, then clear the
    // (1-x)^n denominator; the product's terms above degree n are not
    // affected by the truncation
    std::vector<Int> coeffs(n + 1);
    for (int i = 0; i <= n; ++i) {
        Int odd = 1, even = 1;
        for (int j = 0; j < n; ++j) {
            odd *= 2 * i + 1;
            even *= 2 * i;
        }
        coeffs[i] = odd - even;
    }
    IntPoly series(std::move(coeffs));
    IntPoly product = pow(IntPoly{1, -1}, n) * series;
    std::vector<Int> trimmed(n + 1);
    for (int i = 0; i <= n; ++i) trimmed[i] = product.coeff(i);
    return IntPoly(std::move(trimmed));
}

std::pair<IntPoly, IntPoly> symmetric_decompose(const IntPoly& p, int n) {
    if (n < 0) throw std::invalid_argument("symmetric_decompose: negative center parameter");
    if (p.is_zero()) return {IntPoly{}, IntPoly{}};
    if (p.degree() > n + 1)
        throw std::invalid_argument("symmetric_decompose: no decomposition, degree exceeds n+1");
    // p - x^{n+1} p(1/x) is divisible by 1-x; the quotient is the part
    // symmetric about n/2
    IntPoly q = p - p.reversed(n + 1);
    std::vector<Int> plus(static_cast<std::size_t>(n) + 1, Int(0));
    Int carry = 0;
    for (int i = 0; i <= n; ++i) {
        carry += q.coeff(i);
        plus[i] = carry;
    }
    carry += q.coeff(n + 1);
    if (carry != 0) throw std::invalid_argument("symmetric_decompose: inexact split");
    IntPoly p_plus(std::move(plus));
    IntPoly p_minus = p - p_plus;
    if (!p_plus.is_zero() && !(p_plus.reversed(n) == p_plus))
        throw std::invalid_argument("symmetric_decompose: no decomposition with this n");
    if (!p_minus.is_zero() && !(p_minus.reversed(n + 1) == p_minus))
        throw std::invalid_argument("symmetric_decompose: no decomposition with this n");
    return {std::move(p_plus), std::move(p_minus)};
}

bool coeff_recurrence_check_plus(int n, int k, const FamilyCalculator& calc) {
    if (n < 2 || k < 1) throw std::invalid_argument("coeff_recurrence_check: requires n >= 2, k >= 1");
    const Int lhs = calc.value(Family::FPlus, n).coeff(k);
    Int rhs = Int(2 * k - 1) * calc.value(Family::FPlus, n - 1).coeff(k);
    rhs += Int(2 * (n - k)) * calc.value(Family::FPlus, n - 1).coeff(k - 1);
    rhs += Int(2 * (n - 1)) * calc.value(Family::FPlus, n - 2).coeff(k - 1);
    rhs += calc.value(Family::DB, n - 1).coeff(k);
    return lhs == rhs;
}

bool coeff_recurrence_check_minus(int n, int k, const FamilyCalculator& calc) {
    if (n < 2 || k < 1) throw std::invalid_argument("coeff_recurrence_check: requires n >= 2, k >= 1");
    const Int lhs = calc.value(Family::FMinus, n).coeff(k);
    Int rhs = Int(2 * k - 1) * calc.value(Family::FMinus, n - 1).coeff(k);
    rhs += Int(2 * (n - k)) * calc.value(Family::FMinus, n - 1).coeff(k - 1);
    rhs += Int(2 * (n - 1)) * calc.value(Family::FMinus, n - 2).coeff(k - 1);
    rhs += calc.value(Family::DB, n - 1).coeff(k - 1);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// cross-checked computation

std::vector<MethodValue> FamilyCalculator::fplus_core_methods(int n) const {
    std::vector<MethodValue> mv;
    mv.push_back({"multinomial", f_plus_multinomial(n, *this)});
    mv.push_back({"alt-sum", f_plus_alt_sum(n, *this)});
    mv.push_back({"egf", f_plus_egf(n)});
    mv.push_back({"recurrence", f_plus_recurrence(n, *this)});
    if (n <= opt_.enum_max_b) mv.push_back({"restricted-enum", bn_stats(n).fplus_excb});
    return mv;
}

std::vector<MethodValue> FamilyCalculator::fminus_core_methods(int n) const {
    std::vector<MethodValue> mv;
    mv.push_back({"multinomial", f_minus_multinomial(n, *this)});
    mv.push_back({"alt-sum", f_minus_alt_sum(n, *this)});
    mv.push_back({"egf", f_minus_egf(n)});
    if (n <= opt_.enum_max_b) mv.push_back({"restricted-enum", bn_stats(n).fminus_excb});
    return mv;
}

const FamilyResult& FamilyCalculator::fplus_core(int n) const {
    {
        std::lock_guard lock(mu_);
        auto it = fplus_core_cache_.find(n);
        if (it != fplus_core_cache_.end()) return it->second;
    }
    FamilyResult r = finalize(Family::FPlus, n, fplus_core_methods(n));
    std::lock_guard lock(mu_);
    return fplus_core_cache_.try_emplace(n, std::move(r)).first->second;
}

const FamilyResult& FamilyCalculator::fminus_core(int n) const {
    {
        std::lock_guard lock(mu_);
        auto it = fminus_core_cache_.find(n);
        if (it != fminus_core_cache_.end()) return it->second;
    }
    FamilyResult r = finalize(Family::FMinus, n, fminus_core_methods(n));
    std::lock_guard lock(mu_);
    return fminus_core_cache_.try_emplace(n, std::move(r)).first->second;
}

FamilyResult FamilyCalculator::compute_uncached(Family f, int n) const {
    std::vector<MethodValue> mv;
    switch (f) {
        case Family::A:
            if (n <= opt_.enum_max_a) {
                const SnStats& s = sn_stats(n);
                mv.push_back({"enum-des", s.a_des});
                mv.push_back({"enum-exc", s.a_exc});
            }
            mv.push_back({"egf", eulerian_a_egf(n)});
            break;
        case Family::B: {
            if (n <= opt_.enum_max_b) {
                const BnStats& s = bn_stats(n);
                mv.push_back({"enum-desb", s.b_desb});
                mv.push_back({"enum-excb", s.b_excb});
            }
            IntPoly bplus = value(Family::BPlus, n);
            IntPoly halves = n == 0 ? bplus : bplus + bplus.reversed(n);
            mv.push_back({"halves", std::move(halves)});
            break;
        }
        case Family::BPlus:
            if (n <= opt_.enum_max_b) mv.push_back({"enum", bn_stats(n).bplus_desb});
            mv.push_back({"e2-formula", b_plus_e2(n, *this)});
            mv.push_back({"recurrence", b_plus_recurrence(n, *this)});
            mv.push_back({"series-identity", b_plus_series(n)});
            mv.push_back({"egf", b_plus_egf(n)});
            break;
        case Family::BMinus: {
            if (n <= opt_.enum_max_b) mv.push_back({"enum", bn_stats(n).bminus_desb});
            IntPoly bplus = value(Family::BPlus, n);
            mv.push_back({"reversal", n == 0 ? IntPoly{} : bplus.reversed(n)});
            mv.push_back({"complement", value(Family::B, n) - bplus});
            mv.push_back({"egf", b_minus_egf(n)});
            break;
        }
        case Family::DA:
            if (n <= opt_.enum_max_a) mv.push_back({"enum", sn_stats(n).d_exc});
            mv.push_back({"alt-sum", derangement_a_alt_sum(n, *this)});
            mv.push_back({"egf", derangement_a_egf(n)});
            break;
        case Family::DB:
            if (n <= opt_.enum_max_b) {
                const BnStats& s = bn_stats(n);
                mv.push_back({"enum-excb", s.db_excb});
                mv.push_back({"enum-iexcb", s.db_iexcb});
            }
            mv.push_back({"alt-sum", derangement_b_alt_sum(n, *this)});
            mv.push_back({"main-formula", main_formula(n, *this)});
            mv.push_back({"egf", derangement_b_egf(n)});
            mv.push_back({"fplus-fminus", fplus_core(n).value + fminus_core(n).value});
            break;
        case Family::FPlus: {
            const FamilyResult& core = fplus_core(n);
            for (std::size_t i = 0; i < core.methods.size(); ++i) mv.push_back({core.methods[i], core.value});
            mv.push_back({"decomposition", symmetric_decompose(value(Family::DB, n), n).first});
            break;
        }
        case Family::FMinus: {
            const FamilyResult& core = fminus_core(n);
            for (std::size_t i = 0; i < core.methods.size(); ++i) mv.push_back({core.methods[i], core.value});
            mv.push_back({"decomposition", symmetric_decompose(value(Family::DB, n), n).second});
            mv.push_back({"complement", value(Family::DB, n) - value(Family::FPlus, n)});
            break;
        }
        case Family::XiPlus: {
            GammaVector g = gamma_extract(value(Family::FPlus, n), n);
            mv.push_back({"gamma-extract", IntPoly(std::vector<Int>(g.gammas.begin(), g.gammas.end()))});
            mv.push_back({"multinomial", xi_plus_multinomial(n, *this)});
            break;
        }
        case Family::XiMinus: {
            GammaVector g = gamma_extract(value(Family::FMinus, n), n + 1);
            mv.push_back({"gamma-extract", IntPoly(std::vector<Int>(g.gammas.begin(), g.gammas.end()))});
            mv.push_back({"multinomial", xi_minus_multinomial(n, *this)});
            break;
        }
        case Family::GammaA: {
            if (n < 1) throw std::invalid_argument("gamma expansion of the Eulerian family needs n >= 1");
            GammaVector g = gamma_extract(value(Family::A, n), n - 1);
            mv.push_back({"extract", IntPoly(std::vector<Int>(g.gammas.begin(), g.gammas.end()))});
            break;
        }
        case Family::XiA: {
            GammaVector g = gamma_extract(value(Family::DA, n), n);
            mv.push_back({"extract", IntPoly(std::vector<Int>(g.gammas.begin(), g.gammas.end()))});
            break;
        }
    }
    FamilyResult r = finalize(f, n, std::move(mv));
    if (f == Family::XiPlus || f == Family::XiMinus) {
        for (const Int& c : r.value.coeffs())
            if (c < 0)
                throw VerificationError("family " + family_tag(f) + " at n=" + std::to_string(n) +
                                            ": negative expansion coefficient",
                                        {{family_tag(f), r.value}});
    }
    return r;
}

FamilyResult FamilyCalculator::compute(Family f, int n) const {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
    const auto key = std::make_pair(f, n);
    {
        std::lock_guard lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    FamilyResult r = compute_uncached(f, n);
    std::lock_guard lock(mu_);
    return cache_.try_emplace(key, std::move(r)).first->second;
}

IntPoly FamilyCalculator::value(Family f, int n) const { return compute(f, n).value; }

}  // namespace derange
