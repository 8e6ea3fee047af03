#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace derange {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored lowest degree first.
///
/// The zero polynomial is stored as an empty coefficient list and has no
/// degree; degree() throws on it instead of returning a sentinel value.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(Int c);
    /// c * x^k
    static IntPoly monomial(Int c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const;
    std::span<const Int> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero beyond the stored range.
    const Int& coeff(std::size_t k) const;

    Int eval(const Int& x) const;
    Int sum_of_coeffs() const { return eval(1); }
    IntPoly derivative() const;

    /// x^m * p(1/x). Requires degree(p) <= m.
    IntPoly reversed(int m) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& q);
    IntPoly& operator-=(const IntPoly& q);
    IntPoly& operator*=(const IntPoly& q);

    friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
    friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const Int& c, const IntPoly& p);

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p);

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Index dilation: picks every r-th coefficient, c_0 + c_r x + c_{2r} x^2 + ...
IntPoly er_operator(const IntPoly& p, int r);

/// Coefficients of the power series p(x) / (1-x)^n through x^order.
/// These are always integers, so the result is an IntPoly.
IntPoly series_div_one_minus_x_pow(const IntPoly& p, int n, int order);

IntPoly pow(const IntPoly& p, int e);

Int factorial(int n);
Int binomial(int n, int k);
/// n! / (parts[0]! * parts[1]! * ...); the parts must sum to n.
Int multinomial(int n, std::span<const int> parts);

}  // namespace derange
