#pragma once

#include "derange/intpoly.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace derange {

/// Dense univariate polynomial over exact rationals, lowest degree first.
/// boost::multiprecision keeps every entry in lowest terms with a positive
/// denominator, and the trailing coefficient is kept nonzero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<long long> coeffs);

    static RatPoly constant(Rat c);
    static RatPoly monomial(Rat c, std::size_t k);
    static RatPoly from_int(const IntPoly& p);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const;
    std::span<const Rat> coeffs() const noexcept { return coeffs_; }
    const Rat& coeff(std::size_t k) const;
    const Rat& leading() const;

    /// Exact conversion; throws if any coefficient is not an integer.
    IntPoly to_int() const;
    bool is_integral() const;

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& q);
    RatPoly& operator-=(const RatPoly& q);
    RatPoly& operator*=(const RatPoly& q);
    RatPoly& operator*=(const Rat& c);

    friend RatPoly operator+(RatPoly p, const RatPoly& q) { return p += q; }
    friend RatPoly operator-(RatPoly p, const RatPoly& q) { return p -= q; }
    friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator*(const Rat& c, RatPoly p) { return p *= c; }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
    /// Exact quotient; throws if the remainder is nonzero.
    RatPoly div_exact(const RatPoly& divisor) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

/// Monic gcd computed by the Euclidean algorithm over the rationals.
RatPoly gcd(RatPoly a, RatPoly b);

}  // namespace derange
