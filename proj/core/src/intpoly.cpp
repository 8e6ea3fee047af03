#include "derange/intpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace derange {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Int(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Int& IntPoly::coeff(std::size_t k) const {
    static const Int zero{0};
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Int> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Int(k) * coeffs_[k];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed(int m) const {
    if (m < 0) throw std::invalid_argument("reversed: negative exponent");
    if (is_zero()) return {};
    if (degree() > m) throw std::invalid_argument("reversed: degree exceeds mirror exponent");
    std::vector<Int> r(static_cast<std::size_t>(m) + 1, Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[m - k] = coeffs_[k];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Int(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Int(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Int> r(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& q) { return *this = *this * q; }

IntPoly operator*(const Int& c, const IntPoly& p) {
    if (c == 0) return {};
    IntPoly r = p;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

IntPoly er_operator(const IntPoly& p, int r) {
    if (r < 1) throw std::invalid_argument("er_operator: r must be positive");
    std::vector<Int> out;
    for (std::size_t k = 0; k < p.coeffs().size(); k += r) out.push_back(p.coeff(k));
    return IntPoly(std::move(out));
}

IntPoly series_div_one_minus_x_pow(const IntPoly& p, int n, int order) {
    if (n < 0 || order < 0) throw std::invalid_argument("series_div_one_minus_x_pow: negative argument");
    std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k);
    // one division by (1-x) is a running prefix sum
    for (int pass = 0; pass < n; ++pass)
        for (std::size_t k = 1; k < c.size(); ++k) c[k] += c[k - 1];
    return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& p, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    IntPoly acc = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) acc *= p;
    return acc;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

Int multinomial(int n, std::span<const int> parts) {
    Int m = factorial(n);
    int sum = 0;
    for (int r : parts) {
        if (r < 0) throw std::invalid_argument("multinomial: negative part");
        sum += r;
        m /= factorial(r);
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return m;
}

}  // namespace derange
