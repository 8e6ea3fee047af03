#pragma once

#include "derange/egf.hpp"
#include "derange/intpoly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace derange {

enum class Family { A, B, BPlus, BMinus, DA, DB, FPlus, FMinus, XiPlus, XiMinus, GammaA, XiA };

const std::vector<Family>& all_families();
std::string family_tag(Family f);
std::optional<Family> parse_family(const std::string& tag);

struct FamilyResult {
    Family family = Family::A;
    int n = 0;
    IntPoly value;
    std::vector<std::string> methods;  // sorted tags of the routes that agreed
};

struct MethodValue {
    std::string method;
    IntPoly value;
};

/// Two computation routes for the same polynomial produced different
/// results. Carries every method tag with its value; this is never
/// reconciled silently.
class VerificationError : public std::runtime_error {
public:
    VerificationError(std::string message, std::vector<MethodValue> values);
    const std::vector<MethodValue>& values() const noexcept { return values_; }

private:
    std::vector<MethodValue> values_;
};

/// Computes every polynomial family by all routes that apply at the given
/// index, requires them to agree, and caches the agreed value. Results are
/// immutable once cached; the cache takes a lock only around lookups and
/// idempotent inserts, so concurrent readers are fine.
class FamilyCalculator {
public:
    struct Options {
        int enum_max_a = 10;  // plain-permutation enumeration runs for n <= this
        int enum_max_b = 7;   // signed-permutation enumeration runs for n <= this
        bool allow_large = false;
        int jobs = 1;
    };

    FamilyCalculator() = default;
    explicit FamilyCalculator(Options opt) : opt_(opt) {}

    const Options& options() const noexcept { return opt_; }

    FamilyResult compute(Family f, int n) const;
    IntPoly value(Family f, int n) const;

private:
    struct SnStats {
        IntPoly a_des, a_exc, d_exc;
    };
    struct BnStats {
        IntPoly b_desb, b_ascb, b_excb, b_iexcb;
        IntPoly bplus_desb, bminus_desb;
        IntPoly db_excb, db_iexcb;
        IntPoly fplus_excb, fminus_excb;
    };

    friend struct FamilyMethods;

    const SnStats& sn_stats(int n) const;
    const BnStats& bn_stats(int n) const;
    // f+ and f- agreed across the routes that do not pass through the
    // decomposition of d^B; used by d^B itself to avoid a dependency loop
    const FamilyResult& fplus_core(int n) const;
    const FamilyResult& fminus_core(int n) const;

    FamilyResult compute_uncached(Family f, int n) const;
    std::vector<MethodValue> fplus_core_methods(int n) const;
    std::vector<MethodValue> fminus_core_methods(int n) const;

    Options opt_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Family, int>, FamilyResult> cache_;
    mutable std::map<int, SnStats> sn_cache_;
    mutable std::map<int, BnStats> bn_cache_;
    mutable std::map<int, FamilyResult> fplus_core_cache_, fminus_core_cache_;
};

// ---- individual computation routes ----

/// Coefficient of t^n in the Eulerian generating function; returns 1 for
/// n = 0 to match the global convention.
IntPoly eulerian_a_egf(int n);
IntPoly derangement_a_alt_sum(int n, const FamilyCalculator& calc);
IntPoly derangement_a_egf(int n);
IntPoly derangement_b_alt_sum(int n, const FamilyCalculator& calc);
IntPoly derangement_b_egf(int n);

/// Multinomial composition sum for d^B_n over blocks (r0; r1, ..., rk)
/// with weight x^floor((k+1)/2).
IntPoly main_formula(int n, const FamilyCalculator& calc);
IntPoly f_plus_multinomial(int n, const FamilyCalculator& calc);
IntPoly f_minus_multinomial(int n, const FamilyCalculator& calc);
IntPoly f_plus_alt_sum(int n, const FamilyCalculator& calc);
IntPoly f_minus_alt_sum(int n, const FamilyCalculator& calc);
IntPoly f_plus_egf(int n);
IntPoly f_minus_egf(int n);
IntPoly f_plus_recurrence(int n, const FamilyCalculator& calc);
IntPoly b_plus_e2(int n, const FamilyCalculator& calc);
IntPoly b_plus_recurrence(int n, const FamilyCalculator& calc);
/// Rebuilds B+_n from the power series whose x^i coefficient is
/// (2i+1)^n - (2i)^n.
IntPoly b_plus_series(int n);
IntPoly b_plus_egf(int n);
IntPoly b_minus_egf(int n);
IntPoly xi_plus_multinomial(int n, const FamilyCalculator& calc);
IntPoly xi_minus_multinomial(int n, const FamilyCalculator& calc);

/// Unique split p = p_sym + p_shift with p_sym mirror-symmetric about n/2
/// and p_shift about (n+1)/2. Throws when no such split exists.
std::pair<IntPoly, IntPoly> symmetric_decompose(const IntPoly& p, int n);

/// Coefficient recurrences tying f+/f- entries at n to entries at n-1, n-2
/// and a d^B coefficient. Requires n >= 2, k >= 1.
bool coeff_recurrence_check_plus(int n, int k, const FamilyCalculator& calc);
bool coeff_recurrence_check_minus(int n, int k, const FamilyCalculator& calc);

// ---- exponential generating functions, truncated at the given order ----

EgfSeries egf_eulerian_a(int order);
EgfSeries egf_derangement_a(int order);
EgfSeries egf_derangement_b(int order);
EgfSeries egf_f_plus(int order);
EgfSeries egf_f_minus(int order);
EgfSeries egf_b_plus(int order);
EgfSeries egf_b_minus(int order);

/// Visits compositions (r0; r1, ..., rk) of n with r0 >= 0 and ri >= 1.
/// parity: -1 all k, 0 even k only, 1 odd k only.
void for_each_composition(int n, int parity,
                          const std::function<void(int r0, const std::vector<int>& rest)>& fn);

}  // namespace derange
