#include "derange/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace derange {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::monomial(Rat c, std::size_t k) {
    RatPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Rat(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int RatPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rat& RatPoly::coeff(std::size_t k) const {
    static const Rat zero{0};
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool RatPoly::is_integral() const {
    for (const Rat& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

IntPoly RatPoly::to_int() const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        if (denominator(c) != 1) throw std::domain_error("to_int: non-integer coefficient " + c.str());
        out.push_back(numerator(c));
    }
    return IntPoly(std::move(out));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rat(k) * coeffs_[k];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rat> r(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly& RatPoly::operator*=(const RatPoly& q) { return *this = *this * q; }

RatPoly& RatPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    RatPoly rem = *this;
    if (rem.is_zero() || rem.degree() < divisor.degree()) return {RatPoly{}, rem};
    std::vector<Rat> quot(rem.coeffs_.size() - divisor.coeffs_.size() + 1, Rat(0));
    const Rat& lead = divisor.leading();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        std::size_t top = k + divisor.coeffs_.size() - 1;
        if (top >= rem.coeffs_.size() || rem.coeffs_[top] == 0) continue;
        Rat q = rem.coeffs_[top] / lead;
        quot[k] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem.coeffs_[k + j] -= q * divisor.coeffs_[j];
    }
    rem.normalize();
    return {RatPoly(std::move(quot)), rem};
}

RatPoly RatPoly::div_exact(const RatPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("div_exact: nonzero remainder");
    return q;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[k].str() << ")";
        if (k >= 1) {
            os << "*" << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat inv = Rat(1) / a.leading();
        a *= inv;
    }
    return a;
}

}  // namespace derange
