#pragma once

#include "derange/ratpoly.hpp"

#include <vector>

namespace derange {

/// Truncated exponential generating function in t whose coefficients are
/// polynomials in x over exact rationals.
///
/// Storage convention: entry n holds n! times the series coefficient of t^n,
/// so a family with integer polynomial terms stays integral entry by entry.
/// Products are therefore binomial convolutions.
class EgfSeries {
public:
    explicit EgfSeries(int order);
    EgfSeries(int order, std::vector<RatPoly> entries);

    /// The series of the constant function 1 (multiplicative identity).
    static EgfSeries one(int order);
    /// e^{c t} for a polynomial c = c(x): entry n is c^n.
    static EgfSeries exp_ct(const RatPoly& c, int order);

    int order() const noexcept { return order_; }
    const RatPoly& at(int n) const;
    void set(int n, RatPoly value);

    EgfSeries& operator+=(const EgfSeries& q);
    EgfSeries& operator-=(const EgfSeries& q);
    friend EgfSeries operator+(EgfSeries p, const EgfSeries& q) { return p += q; }
    friend EgfSeries operator-(EgfSeries p, const EgfSeries& q) { return p -= q; }

    /// Binomial convolution: entry n of the product is
    /// sum_k C(n,k) * a_k * b_{n-k}. Orders must match.
    friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);

    /// Multiplicative inverse through the truncation order. The constant
    /// entry must be a nonzero rational constant (degree 0 in x).
    EgfSeries inverse() const;

    /// Multiply every entry by a fixed polynomial in x.
    EgfSeries scaled(const RatPoly& s) const;
    /// Divide every entry exactly by a fixed polynomial in x.
    EgfSeries div_entries_exact(const RatPoly& d) const;

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    int order_;
    std::vector<RatPoly> entries_;
};

}  // namespace derange
