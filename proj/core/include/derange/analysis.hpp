#pragma once

#include "derange/intpoly.hpp"
#include "derange/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace derange {

/// Expansion of a polynomial symmetric about n/2 in the basis
/// x^i (1+x)^(n-2i), i = 0..floor(n/2).
struct GammaVector {
    int n = 0;
    std::vector<Int> gammas;

    IntPoly reconstruct() const;
    bool nonnegative() const;
};

/// True when p = x^n p(1/x). The zero polynomial counts as symmetric for
/// every n by convention.
bool is_symmetric(const IntPoly& p, int n);

/// All peak witnesses j with coefficients nondecreasing up to j and
/// nonincreasing from j on; the polynomial is unimodal iff the set is
/// nonempty. The zero polynomial reports (true, {0}).
std::pair<bool, std::vector<int>> unimodal_peaks(const IntPoly& p);

bool is_log_concave(const IntPoly& p);
bool has_internal_zeros(const IntPoly& p);

/// Unique gamma expansion; requires is_symmetric(p, n).
GammaVector gamma_extract(const IntPoly& p, int n);

/// Exact real-rootedness test: square-free reduction by gcd with the
/// derivative, then a Sturm count of distinct real roots over the
/// rationals. Throws on the zero polynomial.
bool sturm_real_rooted(const IntPoly& p);

/// Number of distinct real roots counted by sign changes of the Sturm
/// sequence between -inf and +inf.
int sturm_distinct_real_roots(const RatPoly& p);

/// Checks every minor of size <= order of the lower triangular Toeplitz
/// matrix (a_{i-j}) over a window of size degree+order+1. Nonnegativity of
/// all such minors is necessary for real-rootedness of a polynomial with
/// nonnegative coefficients, so a negative minor refutes it; a pass at
/// finite order asserts nothing. Requires nonnegative coefficients and
/// order <= 6.
bool toeplitz_minor_check(const IntPoly& p, int order);

struct ShapeReport {
    bool symmetric = false;
    /// Twice the center of symmetry, when defined (the center may be a
    /// half-integer). Unset for the zero polynomial.
    std::optional<int> center_times_two;
    bool zero_polynomial = false;
    bool unimodal = false;
    std::vector<int> peaks;
    bool log_concave = false;
    bool internal_zeros = false;
    std::optional<bool> gamma_nonnegative;  // set when symmetric
    std::optional<bool> real_rooted;        // unset for the zero polynomial
};

/// Runs every shape check on p and asserts the implication chain
/// real-rooted + nonnegative => log-concave, unimodal, no internal zeros.
ShapeReport shape_report(const IntPoly& p);

}  // namespace derange
