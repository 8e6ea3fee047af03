#include "derange/egf.hpp"

#include <stdexcept>

namespace derange {

EgfSeries::EgfSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("EgfSeries: negative order");
    entries_.assign(order + 1, RatPoly{});
}

EgfSeries::EgfSeries(int order, std::vector<RatPoly> entries) : order_(order), entries_(std::move(entries)) {
    if (order < 0) throw std::invalid_argument("EgfSeries: negative order");
    if (entries_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("EgfSeries: entry count must be order+1");
}

EgfSeries EgfSeries::one(int order) {
    EgfSeries s(order);
    s.entries_[0] = RatPoly::constant(1);
    return s;
}

EgfSeries EgfSeries::exp_ct(const RatPoly& c, int order) {
    EgfSeries s(order);
    RatPoly acc = RatPoly::constant(1);
    s.entries_[0] = acc;
    for (int n = 1; n <= order; ++n) {
        acc *= c;
        s.entries_[n] = acc;
    }
    return s;
}

const RatPoly& EgfSeries::at(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("EgfSeries::at");
    return entries_[n];
}

void EgfSeries::set(int n, RatPoly value) {
    if (n < 0 || n > order_) throw std::out_of_range("EgfSeries::set");
    entries_[n] = std::move(value);
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& q) {
    if (order_ != q.order_) throw std::invalid_argument("EgfSeries: order mismatch");
    for (int n = 0; n <= order_; ++n) entries_[n] += q.entries_[n];
    return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& q) {
    if (order_ != q.order_) throw std::invalid_argument("EgfSeries: order mismatch");
    for (int n = 0; n <= order_; ++n) entries_[n] -= q.entries_[n];
    return *this;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("EgfSeries: order mismatch");
    EgfSeries r(a.order_);
    for (int n = 0; n <= a.order_; ++n) {
        RatPoly acc;
        for (int k = 0; k <= n; ++k) {
            if (a.entries_[k].is_zero() || b.entries_[n - k].is_zero()) continue;
            acc += Rat(binomial(n, k)) * (a.entries_[k] * b.entries_[n - k]);
        }
        r.entries_[n] = std::move(acc);
    }
    return r;
}

EgfSeries EgfSeries::inverse() const {
    const RatPoly& a0 = entries_[0];
    if (a0.is_zero() || a0.degree() != 0)
        throw std::domain_error("EgfSeries::inverse: constant entry must be a nonzero rational constant");
    Rat inv0 = Rat(1) / a0.coeff(0);
    EgfSeries r(order_);
    r.entries_[0] = RatPoly::constant(inv0);
    for (int n = 1; n <= order_; ++n) {
        RatPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (entries_[k].is_zero() || r.entries_[n - k].is_zero()) continue;
            acc += Rat(binomial(n, k)) * (entries_[k] * r.entries_[n - k]);
        }
        acc *= -inv0;
        r.entries_[n] = std::move(acc);
    }
    return r;
}

EgfSeries EgfSeries::scaled(const RatPoly& s) const {
    EgfSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.entries_[n] = s * entries_[n];
    return r;
}

EgfSeries EgfSeries::div_entries_exact(const RatPoly& d) const {
    EgfSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.entries_[n] = entries_[n].div_exact(d);
    return r;
}

}  // namespace derange
